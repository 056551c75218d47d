//! Naive normal ordering by repeated rewriting of `YX` into `XY + 1`.
//!
//! Works on explicit letter words and never touches the closed-form
//! reordering coefficients, so it can serve as an independent check.

use std::collections::{BTreeMap, HashMap};

use weylkit::monomial::Monomial;
use weylkit::{Scalar, WeylPoly};

pub type Word = Vec<u8>;

#[derive(Default)]
pub struct RewriteOracle {
    memo: HashMap<Word, BTreeMap<(u32, u32), i64>>,
}

impl RewriteOracle {
    /// Normal form of a word over `b'X'`, `b'Y'` as integer coefficients
    /// on `X^i Y^j`.
    pub fn normal_form(&mut self, w: &[u8]) -> BTreeMap<(u32, u32), i64> {
        if let Some(v) = self.memo.get(w) {
            return v.clone();
        }
        let out = match w.windows(2).position(|p| p == b"YX") {
            None => {
                let i = w.iter().filter(|&&c| c == b'X').count() as u32;
                let j = w.len() as u32 - i;
                BTreeMap::from([((i, j), 1)])
            }
            Some(k) => {
                let mut swapped = w.to_vec();
                swapped[k] = b'X';
                swapped[k + 1] = b'Y';
                let mut dropped = w[..k].to_vec();
                dropped.extend_from_slice(&w[k + 2..]);
                let mut acc = self.normal_form(&swapped);
                for (m, c) in self.normal_form(&dropped) {
                    *acc.entry(m).or_insert(0) += c;
                }
                acc.retain(|_, c| *c != 0);
                acc
            }
        };
        self.memo.insert(w.to_vec(), out.clone());
        out
    }

    fn word_of(m: &Monomial) -> Word {
        let mut w = vec![b'X'; m.x as usize];
        w.extend(std::iter::repeat_n(b'Y', m.y as usize));
        w
    }

    /// Product of two normal-ordered polynomials: concatenate words term by
    /// term and rewrite each concatenation.
    pub fn multiply(&mut self, a: &WeylPoly, b: &WeylPoly) -> WeylPoly {
        let mut terms: Vec<(Monomial, Scalar)> = Vec::new();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let mut w = Self::word_of(ma);
                w.extend(Self::word_of(mb));
                let c = ca * cb;
                for ((i, j), k) in self.normal_form(&w) {
                    terms.push((Monomial::new(i, j), &c * &Scalar::from_int(k)));
                }
            }
        }
        WeylPoly::from_terms(terms)
    }

    /// Normal form of `Y^m X^n`.
    pub fn reorder(&mut self, m: u32, n: u32) -> WeylPoly {
        let mut w = vec![b'Y'; m as usize];
        w.extend(std::iter::repeat_n(b'X', n as usize));
        WeylPoly::from_terms(
            self.normal_form(&w)
                .into_iter()
                .map(|((i, j), k)| (Monomial::new(i, j), Scalar::from_int(k))),
        )
    }
}
