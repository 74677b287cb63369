use std::collections::HashMap;
use std::sync::RwLock;

use super::LatticeVector;
use crate::arith::{gcd, kronecker, DiscriminantPair};
use crate::error::{Error, Result};

const SEARCH_RADII: [i64; 4] = [10, 40, 160, 640];

/// The generalized genus character `χ_Δ(λ)`.
///
/// Zero unless `Δ | D`, `D/Δ` is a square modulo `4N` and `gcd(a, b, c, Δ) = 1`;
/// otherwise `(Δ/n)` for an integer `n` coprime to Δ represented by one of the
/// forms `[N₁a, b, N₂c]` with `N₁N₂ = N`.
pub fn genus_character(pair: &DiscriminantPair, l: &LatticeVector) -> Result<i64> {
    let delta = pair.delta;
    if delta == 1 {
        return Ok(1);
    }
    let d = l.disc();
    if d % delta != 0 {
        return Ok(0);
    }
    let four_n = 4 * l.level;
    let t = (d / delta).rem_euclid(four_n);
    if !(0..four_n).any(|s| (s * s).rem_euclid(four_n) == t) {
        return Ok(0);
    }
    if gcd(gcd(gcd(l.a, l.b), l.c), delta).abs() != 1 {
        return Ok(0);
    }
    let splittings: Vec<(i64, i64)> =
        (1..=l.level).filter(|n1| l.level % n1 == 0).map(|n1| (n1, l.level / n1)).collect();
    for radius in SEARCH_RADII {
        for x in -radius..=radius {
            for y in -radius..=radius {
                for &(n1, n2) in &splittings {
                    let n = n1 * l.a * x * x + l.b * x * y + n2 * l.c * y * y;
                    if n != 0 && gcd(n, delta).abs() == 1 {
                        return Ok(kronecker(delta, n));
                    }
                }
            }
        }
    }
    Err(Error::NoRepresentation(format!("{l} with delta = {delta}")))
}

/// Memoized genus character, keyed on `λ mod ΔL`.
#[derive(Debug)]
pub struct GenusCharacter {
    pair: DiscriminantPair,
    cache: RwLock<HashMap<(i64, i64, i64), i64>>,
}

impl GenusCharacter {
    pub fn new(pair: DiscriminantPair) -> Self {
        Self { pair, cache: RwLock::new(HashMap::new()) }
    }

    pub fn pair(&self) -> &DiscriminantPair {
        &self.pair
    }

    pub fn eval(&self, l: &LatticeVector) -> i64 {
        let m = self.pair.abs_delta();
        if m == 1 {
            return 1;
        }
        let key = (l.a.rem_euclid(m), l.b.rem_euclid(2 * l.level * m), l.c.rem_euclid(m));
        if let Some(&v) = self.cache.read().expect("genus cache poisoned").get(&key) {
            return v;
        }
        let rep = LatticeVector::new(key.0, key.1, key.2, l.level);
        let v = genus_character(&self.pair, &rep).expect("genus character representation search");
        self.cache.write().expect("genus cache poisoned").insert(key, v);
        v
    }
}

impl Clone for GenusCharacter {
    fn clone(&self) -> Self {
        let map = self.cache.read().expect("genus cache poisoned").clone();
        Self { pair: self.pair, cache: RwLock::new(map) }
    }
}
