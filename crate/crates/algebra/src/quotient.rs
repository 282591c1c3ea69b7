//! Reduction modulo triangular rewrite systems `x^k → r`.
//!
//! Each relation rewrites powers of its head variable. Replacements may
//! mention other head variables provided the dependency graph between heads
//! has no cycle, which makes repeated rewriting terminate in a unique
//! normal form whose head degrees are below their exponents.

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::multi::{MultiFrac, MultiPoly, PolyRing};

#[derive(Clone, Debug)]
pub struct Relation<K> {
    pub head: usize,
    pub exponent: u32,
    pub replacement: MultiPoly<K>,
}

#[derive(Clone, Debug)]
pub struct QuotientContext<K> {
    ring: PolyRing,
    relations: Vec<Relation<K>>,
}

impl<K: Field> QuotientContext<K> {
    pub fn new(ring: PolyRing, relations: Vec<Relation<K>>) -> Result<Self> {
        let n = ring.nvars();
        let mut is_head = vec![None; n];
        for (idx, rel) in relations.iter().enumerate() {
            if rel.head >= n {
                return Err(AlgebraError::Configuration(format!("head index {} out of range", rel.head)));
            }
            if rel.exponent == 0 {
                return Err(AlgebraError::Configuration("head exponent must be positive".into()));
            }
            if rel.replacement.ring() != &ring {
                return Err(AlgebraError::Configuration("replacement lives in another ring".into()));
            }
            if is_head[rel.head].is_some() {
                return Err(AlgebraError::Configuration(format!(
                    "variable {} is the head of two relations",
                    ring.vars()[rel.head]
                )));
            }
            if rel.replacement.contains_var(rel.head) {
                return Err(AlgebraError::Configuration(format!(
                    "replacement for {} contains its own head",
                    ring.vars()[rel.head]
                )));
            }
            is_head[rel.head] = Some(idx);
        }
        // Depth-first search for a cycle among heads.
        let deps: Vec<Vec<usize>> = relations
            .iter()
            .map(|rel| {
                relations
                    .iter()
                    .enumerate()
                    .filter(|(_, other)| rel.replacement.contains_var(other.head))
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        let mut state = vec![0u8; relations.len()];
        fn visit(i: usize, deps: &[Vec<usize>], state: &mut [u8]) -> bool {
            match state[i] {
                1 => return false,
                2 => return true,
                _ => {}
            }
            state[i] = 1;
            for &j in &deps[i] {
                if !visit(j, deps, state) {
                    return false;
                }
            }
            state[i] = 2;
            true
        }
        for i in 0..relations.len() {
            if !visit(i, &deps, &mut state) {
                return Err(AlgebraError::Configuration("relations depend on each other cyclically".into()));
            }
        }
        Ok(QuotientContext { ring, relations })
    }

    /// Convenience constructor from `(head name, exponent, replacement)` triples.
    pub fn with_relations(ring: PolyRing, rels: Vec<(&str, u32, MultiPoly<K>)>) -> Result<Self> {
        let mut out = Vec::new();
        for (name, exponent, replacement) in rels {
            out.push(Relation { head: ring.index_of(name)?, exponent, replacement });
        }
        Self::new(ring, out)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn relations(&self) -> &[Relation<K>] {
        &self.relations
    }

    pub fn reduce(&self, e: &MultiPoly<K>) -> Result<MultiPoly<K>> {
        if e.ring() != &self.ring {
            return Err(AlgebraError::Mismatch("element is not in the quotient's ring".into()));
        }
        let mut out = self.ring.zero();
        let mut work: Vec<MultiPoly<K>> = vec![e.clone()];
        while let Some(p) = work.pop() {
            let mut pending = self.ring.zero();
            for (exps, c) in p.terms() {
                let hit = self.relations.iter().find(|r| exps[r.head] >= r.exponent);
                match hit {
                    None => out = &out + &self.ring.monomial(c.clone(), exps.clone()),
                    Some(rel) => {
                        let q = exps[rel.head] / rel.exponent;
                        let mut rest = exps.clone();
                        rest[rel.head] %= rel.exponent;
                        let t = &self.ring.monomial(c.clone(), rest) * &rel.replacement.pow(q);
                        pending = &pending + &t;
                    }
                }
            }
            if !pending.is_zero() {
                work.push(pending);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self, e: &MultiPoly<K>) -> Result<bool> {
        Ok(self.reduce(e)?.is_zero())
    }

    /// Decides `a = b` for fractions by reducing `a.num·b.den − b.num·a.den`.
    pub fn fracs_equal(&self, a: &MultiFrac<K>, b: &MultiFrac<K>) -> Result<bool> {
        self.is_zero(&(&(&a.num * &b.den) - &(&b.num * &a.den)))
    }

    /// A fraction is zero when its numerator reduces to zero; its
    /// denominator must not reduce to zero.
    pub fn frac_is_zero(&self, f: &MultiFrac<K>) -> Result<bool> {
        if self.is_zero(&f.den)? {
            return Err(AlgebraError::DivisionByZero);
        }
        self.is_zero(&f.num)
    }
}
