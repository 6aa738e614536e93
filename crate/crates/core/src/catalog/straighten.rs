//! Normal ordering for algebras with a PBW-type basis.
//!
//! Letters are numbered in the order they appear in normal monomials. A
//! monomial is an exponent vector with `exps[l] < bound[l]`, indexed in mixed
//! radix with letter 0 most significant. Two kinds of rules drive the
//! rewriting: swaps `b·a = Σ c·w` for letters `b > a`, and powers
//! `l^bound = Σ c·w`. Products are built by multiplying a normal monomial by
//! one letter at a time, memoised on `(monomial, letter)`.

use std::collections::HashMap;

use crate::algebra::{Algebra, SparseVec};
use crate::arith::Field;
use crate::error::{Error, Result};

/// `Σ c · word`, each word a sequence of letters.
pub type WordSum<E> = Vec<(E, Vec<usize>)>;

pub struct Straightener<F: Field> {
    field: F,
    names: Vec<String>,
    bounds: Vec<usize>,
    power: Vec<WordSum<F::Elem>>,
    swap: HashMap<(usize, usize), WordSum<F::Elem>>,
    memo: HashMap<(usize, usize), SparseVec<F::Elem>>,
    depth: usize,
}

impl<F: Field> Straightener<F> {
    pub fn new(field: F, letters: &[(&str, usize)]) -> Self {
        Self {
            field,
            names: letters.iter().map(|(n, _)| n.to_string()).collect(),
            bounds: letters.iter().map(|(_, b)| *b).collect(),
            power: vec![Vec::new(); letters.len()],
            swap: HashMap::new(),
            memo: HashMap::new(),
            depth: 0,
        }
    }

    /// `letter^bound = rhs`
    pub fn power_rule(&mut self, letter: usize, rhs: WordSum<F::Elem>) -> &mut Self {
        self.power[letter] = rhs;
        self
    }

    /// `b·a = rhs` for `b > a`.
    pub fn swap_rule(&mut self, b: usize, a: usize, rhs: WordSum<F::Elem>) -> &mut Self {
        assert!(b > a, "swap rules rewrite out-of-order pairs");
        self.swap.insert((b, a), rhs);
        self
    }

    pub fn dim(&self) -> usize {
        self.bounds.iter().product()
    }

    pub fn exponents(&self, mut index: usize) -> Vec<usize> {
        let mut exps = vec![0; self.bounds.len()];
        for l in (0..self.bounds.len()).rev() {
            exps[l] = index % self.bounds[l];
            index /= self.bounds[l];
        }
        exps
    }

    pub fn index(&self, exps: &[usize]) -> usize {
        exps.iter().zip(&self.bounds).fold(0, |acc, (e, b)| acc * b + e)
    }

    /// `x^2s` style label; the empty monomial is `1`.
    pub fn label(&self, index: usize) -> String {
        let exps = self.exponents(index);
        let mut s = String::new();
        for (l, &e) in exps.iter().enumerate() {
            match e {
                0 => {}
                1 => s.push_str(&self.names[l]),
                _ => s.push_str(&format!("{}^{e}", self.names[l])),
            }
        }
        if s.is_empty() {
            "1".into()
        } else {
            s
        }
    }

    fn letters_of(&self, index: usize) -> Vec<usize> {
        let exps = self.exponents(index);
        exps.iter().enumerate().flat_map(|(l, &e)| std::iter::repeat_n(l, e)).collect()
    }

    fn mul_letter(&mut self, mono: usize, letter: usize) -> Result<SparseVec<F::Elem>> {
        if let Some(v) = self.memo.get(&(mono, letter)) {
            return Ok(v.clone());
        }
        self.depth += 1;
        if self.depth > 10_000 {
            return Err(Error::Internal("rewriting does not terminate".into()));
        }
        let mut exps = self.exponents(mono);
        let last = (0..exps.len()).rev().find(|&l| exps[l] > 0);
        let out = match last {
            Some(t) if t > letter => {
                exps[t] -= 1;
                let u = self.index(&exps);
                let rule =
                    self.swap.get(&(t, letter)).cloned().ok_or_else(|| {
                        Error::Internal(format!("no rule for {}{}", self.names[t], self.names[letter]))
                    })?;
                let mut out = Vec::new();
                for (c, word) in rule {
                    for (k, d) in self.mul_word(u, &word)? {
                        out.push((k, self.field.mul(&c, &d)));
                    }
                }
                out
            }
            _ => {
                exps[letter] += 1;
                if exps[letter] < self.bounds[letter] {
                    vec![(self.index(&exps), self.field.one())]
                } else {
                    exps[letter] = 0;
                    let u = self.index(&exps);
                    let mut out = Vec::new();
                    for (c, word) in self.power[letter].clone() {
                        for (k, d) in self.mul_word(u, &word)? {
                            out.push((k, self.field.mul(&c, &d)));
                        }
                    }
                    out
                }
            }
        };
        let out = collect(&self.field, out);
        self.depth -= 1;
        self.memo.insert((mono, letter), out.clone());
        Ok(out)
    }

    fn mul_word(&mut self, mono: usize, word: &[usize]) -> Result<SparseVec<F::Elem>> {
        let mut cur = vec![(mono, self.field.one())];
        for &l in word {
            let mut next = Vec::new();
            for (k, c) in cur {
                for (m, d) in self.mul_letter(k, l)? {
                    next.push((m, self.field.mul(&c, &d)));
                }
            }
            cur = collect(&self.field, next);
        }
        Ok(cur)
    }

    /// Product of two normal monomials.
    pub fn product(&mut self, i: usize, j: usize) -> Result<SparseVec<F::Elem>> {
        let word = self.letters_of(j);
        self.mul_word(i, &word)
    }

    /// The algebra on all normal monomials, checked with [`Algebra::validate`].
    pub fn build(mut self) -> Result<Algebra<F>> {
        let n = self.dim();
        let labels = (0..n).map(|i| self.label(i)).collect();
        let mut unit = vec![self.field.zero(); n];
        unit[0] = self.field.one();
        let mut products = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                products.push((i, j, self.product(i, j)?));
            }
        }
        let alg = Algebra::new(self.field.clone(), labels, unit, products)?;
        alg.validate()?;
        Ok(alg)
    }
}

fn collect<F: Field>(field: &F, mut terms: Vec<(usize, F::Elem)>) -> SparseVec<F::Elem> {
    terms.sort_by_key(|(k, _)| *k);
    let mut out: SparseVec<F::Elem> = Vec::with_capacity(terms.len());
    for (k, c) in terms {
        match out.last_mut() {
            Some((lk, lc)) if *lk == k => field.add_assign(lc, &c),
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !field.is_zero(c));
    out
}
