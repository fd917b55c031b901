//! Interchangeable ways of computing the same object.

use num_bigint::BigUint;
use num_integer::Integer;

use crate::counting::{count_bizley, count_formula};
use crate::error::{Error, Result};
use crate::lediagram::{le_from_path, perm_from_le};
use crate::matrix::ColumnProfile;
use crate::necklace::{bases_from_necklace, necklace_from_bases};
use crate::path::{enumerate_paths, DyckPath};
use crate::permutation::{perm_from_necklace, perm_inverse_explicit, southwest_perm, DecoratedPermutation};
use crate::plabic::{build_plabic, positroid_from_plabic, trip_permutation};
use crate::positroid::{positroid_of_path, Positroid};
use crate::registry::{Named, Registry};

/// Computes `Cat(m, d)`.
pub trait CountMethod: Named + Send + Sync {
    fn count(&self, m: u64, d: u64) -> Result<BigUint>;
}

pub struct Formula;
pub struct Bizley;
pub struct Enumerate;

impl Named for Formula {
    fn name(&self) -> &'static str {
        "formula"
    }

    fn description(&self) -> &'static str {
        "binom(d+m, d) / (d+m), coprime types only"
    }
}

impl CountMethod for Formula {
    fn count(&self, m: u64, d: u64) -> Result<BigUint> {
        count_formula(m, d)
    }
}

impl Named for Bizley {
    fn name(&self) -> &'static str {
        "bizley"
    }

    fn description(&self) -> &'static str {
        "coefficient of the Bizley exponential series"
    }
}

impl CountMethod for Bizley {
    fn count(&self, m: u64, d: u64) -> Result<BigUint> {
        if m == 0 || d == 0 {
            return Err(Error::invalid(format!("type ({m},{d}) must be positive")));
        }
        let g = m.gcd(&d);
        let series = count_bizley(m / g, d / g, g as usize)?;
        Ok(series[g as usize - 1].clone())
    }
}

impl Named for Enumerate {
    fn name(&self) -> &'static str {
        "enumerate"
    }

    fn description(&self) -> &'static str {
        "list every path and count"
    }
}

impl CountMethod for Enumerate {
    fn count(&self, m: u64, d: u64) -> Result<BigUint> {
        Ok(BigUint::from(enumerate_paths(m as usize, d as usize)?.len()))
    }
}

pub fn count_methods() -> Registry<dyn CountMethod> {
    Registry::<dyn CountMethod>::new("count method")
        .with(Box::new(Formula))
        .with(Box::new(Bizley))
        .with(Box::new(Enumerate))
}

/// Computes the decorated permutation of a path's positroid.
pub trait PermutationRoute: Named + Send + Sync {
    fn permutation(&self, p: &DyckPath) -> Result<DecoratedPermutation>;

    /// Whether the route enumerates bases, and so is exponential in `d+m`.
    fn needs_bases(&self) -> bool {
        false
    }
}

pub struct Southwest;
pub struct NecklaceRecipe;
pub struct ExplicitInverse;
pub struct PlabicTrip;
pub struct LePipeDream;

impl Named for Southwest {
    fn name(&self) -> &'static str {
        "southwest"
    }

    fn description(&self) -> &'static str {
        "read the step labels backwards"
    }
}

impl PermutationRoute for Southwest {
    fn permutation(&self, p: &DyckPath) -> Result<DecoratedPermutation> {
        Ok(southwest_perm(p))
    }
}

impl Named for NecklaceRecipe {
    fn name(&self) -> &'static str {
        "necklace-recipe"
    }

    fn description(&self) -> &'static str {
        "bases from minors, lex-minimal necklace, exchange recipe"
    }
}

impl PermutationRoute for NecklaceRecipe {
    fn permutation(&self, p: &DyckPath) -> Result<DecoratedPermutation> {
        perm_from_necklace(&necklace_from_bases(&positroid_of_path(p)?)?)
    }

    fn needs_bases(&self) -> bool {
        true
    }
}

impl Named for ExplicitInverse {
    fn name(&self) -> &'static str {
        "explicit-inverse"
    }

    fn description(&self) -> &'static str {
        "case formula for the inverse on the column profile"
    }
}

impl PermutationRoute for ExplicitInverse {
    fn permutation(&self, p: &DyckPath) -> Result<DecoratedPermutation> {
        perm_inverse_explicit(&ColumnProfile::from_path(p))
    }
}

impl Named for PlabicTrip {
    fn name(&self) -> &'static str {
        "plabic-trip"
    }

    fn description(&self) -> &'static str {
        "trip permutation of the tree plabic graph"
    }
}

impl PermutationRoute for PlabicTrip {
    fn permutation(&self, p: &DyckPath) -> Result<DecoratedPermutation> {
        Ok(trip_permutation(&build_plabic(p)))
    }
}

impl Named for LePipeDream {
    fn name(&self) -> &'static str {
        "le-pipe-dream"
    }

    fn description(&self) -> &'static str {
        "pipes traced through the Le-diagram"
    }
}

impl PermutationRoute for LePipeDream {
    fn permutation(&self, p: &DyckPath) -> Result<DecoratedPermutation> {
        perm_from_le(&le_from_path(p))
    }
}

pub fn permutation_routes() -> Registry<dyn PermutationRoute> {
    Registry::<dyn PermutationRoute>::new("permutation route")
        .with(Box::new(Southwest))
        .with(Box::new(NecklaceRecipe))
        .with(Box::new(ExplicitInverse))
        .with(Box::new(PlabicTrip))
        .with(Box::new(LePipeDream))
}

/// Computes the basis set of a path's positroid.
pub trait BasisRoute: Named + Send + Sync {
    fn bases(&self, p: &DyckPath) -> Result<Positroid>;
}

pub struct Minors;
pub struct OhNecklace;
pub struct PerfectOrientations;

impl Named for Minors {
    fn name(&self) -> &'static str {
        "minors"
    }

    fn description(&self) -> &'static str {
        "nonzero maximal minors of the extended matrix"
    }
}

impl BasisRoute for Minors {
    fn bases(&self, p: &DyckPath) -> Result<Positroid> {
        positroid_of_path(p)
    }
}

impl Named for OhNecklace {
    fn name(&self) -> &'static str {
        "oh-necklace"
    }

    fn description(&self) -> &'static str {
        "Gale intersection over the necklace read off the minors"
    }
}

impl BasisRoute for OhNecklace {
    fn bases(&self, p: &DyckPath) -> Result<Positroid> {
        bases_from_necklace(&necklace_from_bases(&positroid_of_path(p)?)?)
    }
}

impl Named for PerfectOrientations {
    fn name(&self) -> &'static str {
        "perfect-orientation"
    }

    fn description(&self) -> &'static str {
        "boundary sources of perfect orientations of the tree plabic graph"
    }
}

impl BasisRoute for PerfectOrientations {
    fn bases(&self, p: &DyckPath) -> Result<Positroid> {
        positroid_from_plabic(&build_plabic(p))
    }
}

pub fn basis_routes() -> Registry<dyn BasisRoute> {
    Registry::<dyn BasisRoute>::new("basis route")
        .with(Box::new(Minors))
        .with(Box::new(OhNecklace))
        .with(Box::new(PerfectOrientations))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::desk_paths;

    #[test]
    fn count_methods_agree() {
        let reg = count_methods();
        for (m, d) in [(1u64, 1u64), (2, 1), (3, 2), (8, 5), (4, 2), (6, 3)] {
            let e = reg.get("enumerate").unwrap().count(m, d).unwrap();
            assert_eq!(reg.get("bizley").unwrap().count(m, d).unwrap(), e, "({m},{d})");
            if m.gcd(&d) == 1 {
                assert_eq!(reg.get("formula").unwrap().count(m, d).unwrap(), e);
            } else {
                assert!(reg.get("formula").unwrap().count(m, d).is_err());
            }
        }
    }

    #[test]
    fn permutation_routes_agree() {
        let reg = permutation_routes();
        for p in desk_paths(8) {
            let expected = southwest_perm(&p);
            for route in reg.iter() {
                assert_eq!(route.permutation(&p).unwrap(), expected, "{} on {p}", route.name());
            }
        }
    }

    #[test]
    fn basis_routes_agree() {
        let reg = basis_routes();
        for p in desk_paths(7) {
            let expected = positroid_of_path(&p).unwrap();
            for route in reg.iter() {
                assert_eq!(route.bases(&p).unwrap(), expected, "{} on {p}", route.name());
            }
        }
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(
            permutation_routes().get("nope").err(),
            Some(Error::UnknownStrategy { .. })
        ));
    }
}
