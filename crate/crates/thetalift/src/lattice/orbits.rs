//! Γ₀(N)-orbits on `L_{D,h}`.
//!
//! Every orbit contains a vector whose geodesic (or CM point, for `D < 0`)
//! meets the fundamental domain `F_N = ∪ γᵢF`, where `γᵢ` runs over right coset
//! representatives of Γ₀(N) in SL₂(Z). These vectors are finite in number and
//! are enumerated exactly. Two of them lie in the same orbit iff they are joined
//! by a chain of Schreier generators `γᵢXγⱼ⁻¹`, `X` a short word in `T^{±1}, S`,
//! because the geodesic passes from tile to adjacent tile.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{act, GammaElement, LatticeVector};
use crate::arith::C64;
use crate::error::{Error, Result};

const TOL: f64 = 1e-9;

/// Right coset representatives of Γ₀(N) in SL₂(Z), found by breadth-first search over words in `T, S`.
pub fn coset_reps(level: i64) -> Vec<GammaElement> {
    let mut reps = vec![GammaElement::IDENTITY];
    let mut queue = VecDeque::from([GammaElement::IDENTITY]);
    let gens = [GammaElement::T, GammaElement::T.inverse(), GammaElement::S];
    while let Some(g) = queue.pop_front() {
        for x in &gens {
            let h = g.mul(x);
            if coset_index(&reps, &h, level).is_none() {
                reps.push(h);
                queue.push_back(h);
            }
        }
    }
    reps
}

fn coset_index(reps: &[GammaElement], g: &GammaElement, level: i64) -> Option<usize> {
    reps.iter().position(|r| g.mul(&r.inverse()).in_gamma0(level))
}

/// `(δ, δz)` with `δ ∈ SL₂(Z)` and `δz` in the standard fundamental domain.
pub fn reduce_point(z: C64) -> (GammaElement, C64) {
    let mut g = GammaElement::IDENTITY;
    let mut w = z;
    for _ in 0..10_000 {
        let n = (w.re + 0.5).floor();
        if n != 0.0 {
            w -= n;
            g = GammaElement::T.pow(-(n as i64)).mul(&g);
        }
        if w.norm_sqr() < 1.0 - 1e-14 {
            w = -1.0 / w;
            g = GammaElement::S.mul(&g);
        } else {
            break;
        }
    }
    (g, w)
}

/// Integer matrix `(P, Q; R, −P)` of `2N·λ`, rescaled and conjugated freely.
#[derive(Clone, Copy)]
struct Scaled {
    p: i64,
    q: i64,
    r: i64,
}

impl Scaled {
    /// Does the geodesic `R|z|² − 2Px − Q = 0` (or the point, if `D < 0`) meet the closed
    /// standard fundamental domain, enlarged by a small tolerance?
    fn meets_domain(&self, d: i64) -> bool {
        let (p, q, r) = (self.p as f64, self.q as f64, self.r as f64);
        if d < 0 {
            let z = C64::new(p / r, (-d as f64).sqrt() / r.abs());
            return z.re.abs() <= 0.5 + TOL && z.norm_sqr() >= 1.0 - TOL;
        }
        if self.r == 0 {
            return (q / (2.0 * p)).abs() <= 0.5 + TOL;
        }
        let x0 = p / r;
        let rho = (d as f64).sqrt() / r.abs();
        let lo = (x0 - rho).max(-0.5 - TOL);
        let hi = (x0 + rho).min(0.5 + TOL);
        if lo > hi {
            return false;
        }
        let f = |x: f64| rho * rho - x0 * x0 + 2.0 * x * x0;
        f(lo).max(f(hi)) >= 1.0 - TOL
    }
}

/// All integer `(P, Q, R)` with `P² + QR = D` whose geodesic meets the fundamental domain.
fn domain_vectors(d: i64) -> Vec<Scaled> {
    let mut out = Vec::new();
    let sd = (d.abs() as f64).sqrt();
    let rmax = (2.0 * sd / 3f64.sqrt() + TOL).floor() as i64;
    for r in -rmax..=rmax {
        if r == 0 {
            if d > 0 {
                let p = sd.round() as i64;
                if p * p == d {
                    for p in [-p, p] {
                        for q in -p.abs()..=p.abs() {
                            out.push(Scaled { p, q, r: 0 });
                        }
                    }
                }
            }
            continue;
        }
        let pmax = if d > 0 { (r.abs() as f64 / 2.0 + sd).ceil() as i64 } else { r.abs() / 2 + 1 };
        for p in -pmax..=pmax {
            let rest = d - p * p;
            if rest % r != 0 {
                continue;
            }
            let s = Scaled { p, q: rest / r, r };
            if s.meets_domain(d) {
                out.push(s);
            }
        }
    }
    out
}

fn words(max_len: usize) -> Vec<GammaElement> {
    let gens = [GammaElement::T, GammaElement::T.inverse(), GammaElement::S];
    let mut all = vec![];
    let mut layer = vec![GammaElement::IDENTITY];
    for _ in 0..max_len {
        layer = layer.iter().flat_map(|w| gens.iter().map(move |g| w.mul(g))).collect();
        all.extend(layer.iter().copied());
    }
    all
}

/// Schreier generators `γᵢXγⱼ⁻¹ ∈ Γ₀(N)` for the tile adjacencies `X`.
fn schreier_generators(level: i64, reps: &[GammaElement]) -> Vec<GammaElement> {
    let mut gens = BTreeSet::new();
    for r in reps {
        for x in words(4) {
            let delta = r.mul(&x);
            let j = coset_index(reps, &delta, level).expect("coset representatives are complete");
            let g = delta.mul(&reps[j].inverse());
            if g != GammaElement::IDENTITY {
                gens.insert((g.a, g.b, g.c, g.d));
                let gi = g.inverse();
                gens.insert((gi.a, gi.b, gi.c, gi.d));
            }
        }
    }
    gens.into_iter().map(|(a, b, c, d)| GammaElement::sl2(a, b, c, d)).collect()
}

fn rep_key(l: &LatticeVector) -> (i64, i64, i64, i64) {
    (l.a.abs().max(l.b.abs()).max(l.c.abs()), l.a, l.b, l.c)
}

/// The orbit decomposition of `L_{D,h}` at level `N`.
#[derive(Debug, Clone)]
pub struct OrbitSet {
    pub level: i64,
    pub d: i64,
    pub h: i64,
    /// Vectors meeting `F_N`, with the index of their orbit.
    members: BTreeMap<LatticeVector, usize>,
    pub reps: Vec<LatticeVector>,
    cosets: Vec<GammaElement>,
}

impl OrbitSet {
    pub fn build(level: i64, d: i64, h: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArgument("orbit enumeration needs D != 0".into()));
        }
        let h = h.rem_euclid(2 * level);
        let cosets = coset_reps(level);
        let base = domain_vectors(d);
        let mut set = BTreeSet::new();
        for g in &cosets {
            for s in &base {
                // λ = γμγ⁻¹ where μ meets F
                let img = g.conj_matrix([s.p, s.q, s.r, -s.p]);
                if let Some(l) = LatticeVector::from_scaled_matrix(img, level) {
                    if l.coset() == h {
                        set.insert(l);
                    }
                }
            }
        }
        let members: Vec<LatticeVector> = set.into_iter().collect();
        let index: BTreeMap<LatticeVector, usize> =
            members.iter().enumerate().map(|(i, l)| (*l, i)).collect();
        let mut parent: Vec<usize> = (0..members.len()).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        let gens = schreier_generators(level, &cosets);
        for (i, l) in members.iter().enumerate() {
            for g in &gens {
                if let Some(&j) = index.get(&act(g, l)) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut reps: BTreeMap<usize, LatticeVector> = BTreeMap::new();
        for (i, l) in members.iter().enumerate() {
            let root = find(&mut parent, i);
            let entry = reps.entry(root).or_insert(*l);
            if rep_key(l) < rep_key(entry) {
                *entry = *l;
            }
        }
        let mut rep_list: Vec<(usize, LatticeVector)> = reps.into_iter().collect();
        rep_list.sort_by_key(|(_, l)| rep_key(l));
        let order: BTreeMap<usize, usize> =
            rep_list.iter().enumerate().map(|(k, (root, _))| (*root, k)).collect();
        let members = members
            .iter()
            .enumerate()
            .map(|(i, l)| (*l, order[&find(&mut parent, i)]))
            .collect();
        Ok(Self { level, d, h, members, reps: rep_list.into_iter().map(|(_, l)| l).collect(), cosets })
    }

    /// Index of the orbit containing λ.
    pub fn classify(&self, l: &LatticeVector) -> Option<usize> {
        if l.level != self.level || l.disc() != self.d || l.coset() != self.h {
            return None;
        }
        let (_, m) = reduce_vector_with(l, &self.cosets);
        self.members.get(&m).copied()
    }
}

/// One representative per Γ₀(N)-orbit of `L_{D,h}`.
pub fn orbit_reps(level: i64, d: i64, h: i64) -> Result<Vec<LatticeVector>> {
    let set = OrbitSet::build(level, d, h)?;
    Ok(set.reps)
}

/// A point on the geodesic of λ, or its CM point when `Q(λ) < 0`.
pub(crate) fn point_on(l: &LatticeVector) -> C64 {
    let d = l.disc();
    let n = l.level as f64;
    let (a, b, c) = (l.a as f64, l.b as f64, l.c as f64);
    if d < 0 {
        return C64::new(b, (-d as f64).sqrt() * c.signum()) / (2.0 * c * n);
    }
    if l.c == 0 {
        return C64::new(a / b, 1.0);
    }
    C64::new(b / (2.0 * c * n), (d as f64).sqrt() / (2.0 * c.abs() * n))
}

fn reduce_vector_with(l: &LatticeVector, cosets: &[GammaElement]) -> (GammaElement, LatticeVector) {
    let (delta, _) = reduce_point(point_on(l));
    let di = delta.inverse();
    let j = coset_index(cosets, &di, l.level).expect("coset representatives are complete");
    let g = di.mul(&cosets[j].inverse());
    let gi = g.inverse();
    (gi, act(&gi, l))
}

/// `(g, gλ)` with `g ∈ Γ₀(N)` and the geodesic of `gλ` meeting `F_N`.
pub fn reduce_vector(l: &LatticeVector) -> (GammaElement, LatticeVector) {
    reduce_vector_with(l, &coset_reps(l.level))
}

pub fn same_orbit(l: &LatticeVector, m: &LatticeVector) -> Result<bool> {
    if l.level != m.level || l.disc() != m.disc() || l.coset() != m.coset() {
        return Ok(false);
    }
    let set = OrbitSet::build(l.level, l.disc(), l.coset())?;
    match (set.classify(l), set.classify(m)) {
        (Some(a), Some(b)) => Ok(a == b),
        _ => Err(Error::OrbitBound(format!("could not place {l} or {m} in F_N"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::enumerate;

    fn index(n: i64) -> usize {
        let mut psi = n as f64;
        let mut m = n;
        let mut p = 2;
        while m > 1 {
            if m % p == 0 {
                psi *= 1.0 + 1.0 / p as f64;
                while m % p == 0 {
                    m /= p;
                }
            }
            p += 1;
        }
        psi as usize
    }

    #[test]
    fn coset_counts() {
        for n in 1..=12 {
            assert_eq!(coset_reps(n).len(), index(n), "N = {n}");
        }
    }

    #[test]
    fn reduce_point_lands_in_domain() {
        for z in [C64::new(0.37, 0.01), C64::new(-3.2, 0.4), C64::new(0.1, 5.0)] {
            let (g, w) = reduce_point(z);
            assert!(w.re.abs() <= 0.5 + 1e-12 && w.norm() >= 1.0 - 1e-12);
            assert!((g.apply(z) - w).norm() < 1e-9);
        }
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(orbit_reps(1, 5, 1).unwrap().len(), 1);
        assert_eq!(orbit_reps(1, 8, 0).unwrap().len(), 1);
        assert!(orbit_reps(1, 2, 0).unwrap().is_empty());
        assert!(orbit_reps(1, 0, 0).is_err());
    }

    #[test]
    fn class_numbers_at_level_one() {
        // h(D) for positive definite forms, counting both λ and −λ (the sign of a is free)
        for (d, h) in [(-3, 1), (-4, 1), (-23, 3), (-47, 5), (-20, 2), (-56, 4)] {
            assert_eq!(orbit_reps(1, d, d.rem_euclid(2)).unwrap().len(), 2 * h, "D = {d}");
        }
        // narrow class numbers of indefinite forms
        for (d, h) in [(5, 1), (12, 2), (13, 1), (40, 2), (60, 4), (136, 4)] {
            assert_eq!(orbit_reps(1, d, d.rem_euclid(2)).unwrap().len(), h, "D = {d}");
        }
        // square discriminants: D = f² has f orbits at level 1
        for f in 1..=6i64 {
            assert_eq!(orbit_reps(1, f * f, f % 2).unwrap().len(), f as usize, "D = {}", f * f);
        }
    }

    #[test]
    fn enumerated_vectors_fall_into_exactly_one_orbit() {
        for (n, d, h) in [(1, 5, 1), (2, 17, 1), (3, 33, 3), (6, 97, 1), (2, -7, 1), (3, 24, 0), (2, 16, 0)] {
            let set = OrbitSet::build(n, d, h).unwrap();
            for l in enumerate(n, d, h, 12) {
                let k = set.classify(&l).unwrap_or_else(|| panic!("{l} unplaced"));
                assert!(k < set.reps.len());
                assert_eq!(set.classify(&set.reps[k]), Some(k));
            }
        }
    }
}
