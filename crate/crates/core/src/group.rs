//! The operator group of a finite quandle, realized as the permutation
//! group generated by the inner maps `rho_b`, and the connectivity test.

use std::collections::{HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{QuandleError, Result};
use crate::perm::Permutation;
use crate::quandle::FiniteQuandle;
use crate::word::{evaluate_raw, Letter, Word};

pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// A finite permutation group with every element materialized.
#[derive(Clone, Debug)]
pub struct PermGroup {
    generators: Vec<Permutation>,
    // BFS discovery order, identity first
    elements: Vec<Permutation>,
}

impl PermGroup {
    /// Closes `generators` under composition by breadth-first search.
    ///
    /// Fails once more than `cap` elements have been found.
    pub fn generate(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
        let mut elements = vec![identity.clone()];
        let mut queue = VecDeque::from([identity]);
        // distinct generators only
        let mut gens: Vec<Permutation> = Vec::new();
        for g in &generators {
            if !g.is_identity() && !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        while let Some(g) = queue.pop_front() {
            for s in &gens {
                let h = s.compose(&g);
                if seen.insert(h.clone()) {
                    if elements.len() >= cap {
                        return Err(QuandleError::GroupTooLarge { cap });
                    }
                    elements.push(h.clone());
                    queue.push_back(h);
                }
            }
        }
        Ok(Self {
            generators,
            elements,
        })
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }
}

/// The permutation image of the operator group: `<rho_b : b in X>`.
pub fn operator_group(q: &FiniteQuandle, cap: usize) -> Result<PermGroup> {
    PermGroup::generate(q.order(), q.inner_representation(), cap)
}

/// Orbit of `x` under all `rho_b` and their inverses, sorted.
pub fn orbit(q: &FiniteQuandle, x: usize) -> Result<Vec<usize>> {
    q.check_index(x)?;
    let n = q.order();
    let mut seen = vec![false; n];
    seen[x] = true;
    let mut stack = vec![x];
    while let Some(y) = stack.pop() {
        for b in 0..n {
            for z in [q.op_raw(y, b), q.op_inv_raw(y, b)] {
                if !seen[z] {
                    seen[z] = true;
                    stack.push(z);
                }
            }
        }
    }
    Ok((0..n).filter(|&i| seen[i]).collect())
}

/// Whether the operator group acts transitively.
pub fn is_connected(q: &FiniteQuandle) -> bool {
    orbit(q, 0).map(|o| o.len() == q.order()).unwrap_or(false)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtendedAxiomCounterexample {
    pub a: usize,
    pub b: usize,
    pub word: Word,
    /// 1 for `(a^b)^c = (a^c)^(b^c)`, 2 for `a^(b^c) = a^(c^-1 b c)`.
    pub identity: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtendedAxiomReport {
    pub pass: bool,
    pub trials: usize,
    pub witnesses: Vec<ExtendedAxiomCounterexample>,
}

pub const MAX_TRIAL_WORD_LEN: usize = 8;

pub(crate) fn random_word(rng: &mut impl Rng, n: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new((0..len).map(|_| {
        let e = rng.gen_range(0..n);
        if rng.gen_bool(0.5) {
            Letter::pos(e)
        } else {
            Letter::neg(e)
        }
    }))
}

/// Checks, for seeded random `a`, `b` and words `c` of length at most 8,
/// that `(a^b)^c = (a^c)^(b^c)` and `a^(b^c) = a^(c^-1 b c)`.
pub fn extended_axiom_check(q: &FiniteQuandle, trials: usize, seed: u64) -> ExtendedAxiomReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = q.order();
    let mut witnesses = Vec::new();
    for _ in 0..trials {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        let c = random_word(&mut rng, n, MAX_TRIAL_WORD_LEN);
        let b_c = evaluate_raw(q, b, &c);

        let lhs = evaluate_raw(q, q.op_raw(a, b), &c);
        let rhs = q.op_raw(evaluate_raw(q, a, &c), b_c);
        if lhs != rhs {
            witnesses.push(ExtendedAxiomCounterexample {
                a,
                b,
                word: c.clone(),
                identity: 1,
            });
        }

        let conj = c.inverse().concat(&Word::new([Letter::pos(b)])).concat(&c);
        if evaluate_raw(q, a, &conj) != q.op_raw(a, b_c) {
            witnesses.push(ExtendedAxiomCounterexample {
                a,
                b,
                word: c,
                identity: 2,
            });
        }
    }
    ExtendedAxiomReport {
        pass: witnesses.is_empty(),
        trials,
        witnesses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::trivial_quandle;

    fn affine(n: usize, t: usize) -> FiniteQuandle {
        FiniteQuandle::from_fn_unchecked(n, |a, b| (t * a + (n + 1 - t) * b) % n)
    }

    #[test]
    fn operator_group_orders() {
        assert_eq!(
            operator_group(&trivial_quandle(4).unwrap(), 10)
                .unwrap()
                .order(),
            1
        );
        assert_eq!(
            operator_group(&affine(5, 2), DEFAULT_GROUP_CAP)
                .unwrap()
                .order(),
            20
        );
        assert_eq!(
            operator_group(&affine(7, 2), DEFAULT_GROUP_CAP)
                .unwrap()
                .order(),
            21
        );
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            operator_group(&affine(5, 2), 19).unwrap_err(),
            QuandleError::GroupTooLarge { cap: 19 }
        );
        assert!(operator_group(&affine(5, 2), 20).is_ok());
    }

    #[test]
    fn group_is_closed() {
        let g = operator_group(&affine(7, 3), DEFAULT_GROUP_CAP).unwrap();
        let set: HashSet<_> = g.elements().iter().cloned().collect();
        for x in g.elements() {
            assert!(set.contains(&x.inverse()));
            for y in g.elements().iter().step_by(5) {
                assert!(set.contains(&x.compose(y)));
            }
        }
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&affine(5, 2)));
        assert!(!is_connected(&trivial_quandle(3).unwrap()));
        assert!(is_connected(&trivial_quandle(1).unwrap()));
        let z9 = affine(9, 4);
        assert!(!is_connected(&z9));
        assert_eq!(orbit(&z9, 0).unwrap(), vec![0, 3, 6]);
    }

    #[test]
    fn extended_axioms_hold() {
        for q in [affine(5, 2), affine(7, 3), trivial_quandle(6).unwrap()] {
            let r = extended_axiom_check(&q, 500, 7);
            assert!(r.pass, "{:?}", r.witnesses.first());
        }
    }

    #[test]
    fn extended_check_catches_non_quandles() {
        // a^b = b: bijective columns fail, but evaluate still runs on raw table
        let bogus =
            FiniteQuandle::from_fn_unchecked(3, |a, b| if b == 0 { (a + 1) % 3 } else { a });
        let r = extended_axiom_check(&bogus, 500, 1);
        assert!(!r.pass);
    }
}
