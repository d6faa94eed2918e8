//! Quandle maps, generated subquandles and automorphisms.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::alexander::AlexanderParams;
use crate::error::{QuandleError, Result};
use crate::modular::{inverse, is_prime, mul_mod};
use crate::quandle::FiniteQuandle;
use crate::word::evaluate;

/// Largest carrier for which the factorial automorphism search is allowed.
pub const BRUTE_FORCE_LIMIT: usize = 10;

/// A total map between quandle carriers, stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuandleMap {
    dst_n: usize,
    images: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct MapJson {
    images: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dst_n: Option<usize>,
}

impl QuandleMap {
    pub fn new(images: Vec<usize>, dst_n: usize) -> Result<Self> {
        if let Some(&bad) = images.iter().find(|&&y| y >= dst_n) {
            return Err(QuandleError::IndexOutOfRange {
                index: bad,
                n: dst_n,
            });
        }
        Ok(Self { dst_n, images })
    }

    /// A self-map of a carrier with `images.len()` elements.
    pub fn endo(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        Self::new(images, n)
    }

    pub fn identity(n: usize) -> Self {
        Self {
            dst_n: n,
            images: (0..n).collect(),
        }
    }

    pub fn src_n(&self) -> usize {
        self.images.len()
    }

    pub fn dst_n(&self) -> usize {
        self.dst_n
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_bijective(&self) -> bool {
        if self.src_n() != self.dst_n {
            return false;
        }
        let mut seen = vec![false; self.dst_n];
        self.images
            .iter()
            .all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    /// `self o other`: apply `other` first.
    pub fn compose(&self, other: &QuandleMap) -> Result<QuandleMap> {
        if other.dst_n != self.src_n() {
            return Err(QuandleError::DimensionMismatch(format!(
                "cannot compose map on {} elements after map into {}",
                self.src_n(),
                other.dst_n
            )));
        }
        Ok(QuandleMap {
            dst_n: self.dst_n,
            images: other.images.iter().map(|&y| self.images[y]).collect(),
        })
    }

    pub fn inverse(&self) -> Option<QuandleMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.dst_n];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Some(QuandleMap {
            dst_n: self.src_n(),
            images: inv,
        })
    }
}

impl Serialize for QuandleMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let dst_n = (self.dst_n != self.src_n()).then_some(self.dst_n);
        MapJson {
            images: self.images.clone(),
            dst_n,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuandleMap {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = MapJson::deserialize(d)?;
        let dst_n = j.dst_n.unwrap_or(j.images.len());
        QuandleMap::new(j.images, dst_n).map_err(serde::de::Error::custom)
    }
}

/// Whether `f(x^y) = f(x)^f(y)` for all `x, y`.
pub fn is_homomorphism(src: &FiniteQuandle, dst: &FiniteQuandle, f: &QuandleMap) -> Result<bool> {
    if f.src_n() != src.order() || f.dst_n() != dst.order() {
        return Err(QuandleError::DimensionMismatch(format!(
            "map {} -> {} does not match quandles of order {} and {}",
            f.src_n(),
            f.dst_n(),
            src.order(),
            dst.order()
        )));
    }
    let n = src.order();
    Ok((0..n)
        .all(|x| (0..n).all(|y| f.apply(src.op_raw(x, y)) == dst.op_raw(f.apply(x), f.apply(y)))))
}

/// The smallest subset containing `gens` that is closed under the operation.
pub fn generated_subquandle(q: &FiniteQuandle, gens: &[usize]) -> Result<BTreeSet<usize>> {
    if gens.is_empty() {
        return Err(QuandleError::Precondition("generator set is empty".into()));
    }
    let n = q.order();
    let mut member = vec![false; n];
    let mut elems: Vec<usize> = Vec::new();
    for &g in gens {
        q.check_index(g)?;
        if !std::mem::replace(&mut member[g], true) {
            elems.push(g);
        }
    }
    // every pair (i, j) with max(i, j) < done has been combined
    let mut done = 0;
    while done < elems.len() {
        let k = done;
        done += 1;
        let mut i = 0;
        while i <= k {
            for (x, y) in [(elems[i], elems[k]), (elems[k], elems[i])] {
                let z = q.op_raw(x, y);
                if !std::mem::replace(&mut member[z], true) {
                    elems.push(z);
                }
            }
            i += 1;
        }
    }
    Ok(elems.into_iter().collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairMode {
    AllPairs,
    Sampled { count: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenerationWitness {
    pub a: usize,
    pub b: usize,
    /// Size of the subquandle generated by `{a, b}` when it is not everything.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closure_size: Option<usize>,
    /// Target the explicit word failed to reach.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word_target: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoGenerationReport {
    pub n: u64,
    pub t: u64,
    pub pass: bool,
    pub vacuous: bool,
    pub pairs_checked: usize,
    pub witnesses: Vec<GenerationWitness>,
}

/// Checks that every tested pair `a != b` generates all of `Z_p`, and that
/// the explicit generating word carries `a` to every `c`.
pub fn verify_two_generation(
    params: &AlexanderParams,
    mode: PairMode,
) -> Result<TwoGenerationReport> {
    let p = params.n();
    if p == 2 {
        return Ok(TwoGenerationReport {
            n: p,
            t: params.t(),
            pass: true,
            vacuous: true,
            pairs_checked: 0,
            witnesses: vec![],
        });
    }
    if !is_prime(p) {
        return Err(QuandleError::Precondition(format!(
            "modulus {p} is not prime"
        )));
    }
    if params.is_trivial() {
        return Err(QuandleError::Precondition(
            "t = 1 gives the trivial quandle".into(),
        ));
    }
    let n = p as usize;
    let pairs: Vec<(usize, usize)> = match mode {
        PairMode::AllPairs => (0..n)
            .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
            .collect(),
        PairMode::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count)
                .map(|_| {
                    let a = rng.gen_range(0..n);
                    let b = (a + rng.gen_range(1..n)) % n;
                    (a, b)
                })
                .collect()
        }
    };

    let q = params.quandle();
    let mut witnesses = Vec::new();
    for &(a, b) in &pairs {
        let closure = generated_subquandle(&q, &[a, b])?;
        if closure.len() != n {
            witnesses.push(GenerationWitness {
                a,
                b,
                closure_size: Some(closure.len()),
                word_target: None,
            });
        }
        for c in 0..n {
            let w = params.generating_word(a as u64, b as u64, c as u64)?;
            if evaluate(&q, a, &w)? != c {
                witnesses.push(GenerationWitness {
                    a,
                    b,
                    closure_size: None,
                    word_target: Some(c),
                });
            }
        }
    }
    Ok(TwoGenerationReport {
        n: p,
        t: params.t(),
        pass: witnesses.is_empty(),
        vacuous: false,
        pairs_checked: pairs.len(),
        witnesses,
    })
}

/// The automorphism of a prime-order Alexander quandle sending `a -> c` and
/// `b -> d`: the affine map `x -> lambda (x - a) + c` with
/// `lambda = (c - d)(a - b)^-1`.
pub fn pair_automorphism(
    params: &AlexanderParams,
    a: u64,
    b: u64,
    c: u64,
    d: u64,
) -> Result<QuandleMap> {
    let p = params.n();
    if !is_prime(p) {
        return Err(QuandleError::Precondition(format!(
            "modulus {p} is not prime"
        )));
    }
    if params.is_trivial() {
        return Err(QuandleError::Precondition(
            "t = 1 gives the trivial quandle".into(),
        ));
    }
    let (a, b, c, d) = (a % p, b % p, c % p, d % p);
    if a == b || c == d {
        return Err(QuandleError::Precondition(
            "both pairs must consist of distinct elements".into(),
        ));
    }
    let diff_inv = inverse(params.reduce(a as i128 - b as i128), p).expect("a != b mod prime");
    let lambda = mul_mod(params.reduce(c as i128 - d as i128), diff_inv, p);
    let images = (0..p)
        .map(|x| {
            params.reduce(
                mul_mod(lambda, params.reduce(x as i128 - a as i128), p) as i128 + c as i128,
            ) as usize
        })
        .collect();
    QuandleMap::endo(images)
}

/// All automorphisms, sorted by image array.
///
/// When some pair `(0, j)` generates the quandle, candidates are the
/// extensions of each choice of images for that pair. Otherwise falls back
/// to a backtracking search over bijections, limited to
/// [`BRUTE_FORCE_LIMIT`] elements.
pub fn enumerate_automorphisms(q: &FiniteQuandle) -> Result<Vec<QuandleMap>> {
    match generating_pair(q) {
        Some(pair) => Ok(automorphisms_from_generating_pair(q, pair)),
        None => enumerate_automorphisms_brute(q),
    }
}

fn generating_pair(q: &FiniteQuandle) -> Option<(usize, usize)> {
    let n = q.order();
    (1..n).map(|j| (0, j)).find(|&(g, h)| {
        generated_subquandle(q, &[g, h])
            .map(|s| s.len() == n)
            .unwrap_or(false)
    })
}

fn automorphisms_from_generating_pair(
    q: &FiniteQuandle,
    (g, h): (usize, usize),
) -> Vec<QuandleMap> {
    let n = q.order();
    let mut out = Vec::new();
    for c in 0..n {
        for d in (0..n).filter(|&d| d != c) {
            if let Some(f) = extend_from_pair(q, (g, h), (c, d)) {
                out.push(f);
            }
        }
    }
    out.sort();
    out
}

/// Propagates `f(x^y) = f(x)^f(y)` from `f(g) = c`, `f(h) = d`; returns the
/// map only if it is a consistent bijective homomorphism.
fn extend_from_pair(
    q: &FiniteQuandle,
    (g, h): (usize, usize),
    (c, d): (usize, usize),
) -> Option<QuandleMap> {
    let n = q.order();
    let mut image = vec![usize::MAX; n];
    image[g] = c;
    image[h] = d;
    let mut elems = vec![g, h];
    let mut done = 0;
    while done < elems.len() {
        let k = done;
        done += 1;
        for i in 0..=k {
            for (x, y) in [(elems[i], elems[k]), (elems[k], elems[i])] {
                let z = q.op_raw(x, y);
                let fz = q.op_raw(image[x], image[y]);
                if image[z] == usize::MAX {
                    image[z] = fz;
                    elems.push(z);
                } else if image[z] != fz {
                    return None;
                }
            }
        }
    }
    let f = QuandleMap::endo(image).ok()?;
    (f.is_bijective() && is_homomorphism(q, q, &f).unwrap_or(false)).then_some(f)
}

/// Backtracking search over all bijections, pruning on partial
/// homomorphism failures. Results come out in lexicographic order.
pub fn enumerate_automorphisms_brute(q: &FiniteQuandle) -> Result<Vec<QuandleMap>> {
    let n = q.order();
    if n > BRUTE_FORCE_LIMIT {
        return Err(QuandleError::SearchTooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();
    backtrack(q, 0, &mut image, &mut used, &mut out);
    Ok(out)
}

fn backtrack(
    q: &FiniteQuandle,
    k: usize,
    image: &mut [usize],
    used: &mut [bool],
    out: &mut Vec<QuandleMap>,
) {
    let n = q.order();
    if k == n {
        out.push(QuandleMap {
            dst_n: n,
            images: image.to_vec(),
        });
        return;
    }
    for v in 0..n {
        if used[v] {
            continue;
        }
        image[k] = v;
        used[v] = true;
        if consistent_up_to(q, k, image) {
            backtrack(q, k + 1, image, used, out);
        }
        used[v] = false;
        image[k] = usize::MAX;
    }
}

// checks every product x^y with x, y, x^y all in 0..=k, where at least one of x, y is k
fn consistent_up_to(q: &FiniteQuandle, k: usize, image: &[usize]) -> bool {
    let check = |x: usize, y: usize| {
        let z = q.op_raw(x, y);
        z > k || image[z] == q.op_raw(image[x], image[y])
    };
    (0..=k).all(|i| check(i, k) && check(k, i))
        // products landing on k from earlier pairs
        && (0..k).all(|x| (0..k).all(|y| q.op_raw(x, y) != k || check(x, y)))
}
