//! Every representation of a path's positroid, addressable by name.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lediagram::le_from_path;
use crate::matrix::{path_to_matrix, phi, ColumnProfile};
use crate::necklace::necklace_from_bases;
use crate::path::DyckPath;
use crate::permutation::southwest_perm;
use crate::plabic::build_plabic;
use crate::polytope::{hrep_general, hrep_refined, HPolytope};
use crate::positroid::positroid_of_path;
use crate::registry::{Named, Registry};

pub trait Representation: Named + Send + Sync {
    fn to_json(&self, p: &DyckPath) -> Result<Value>;

    /// Human-readable form; pretty JSON unless the target has a better one.
    fn to_text(&self, p: &DyckPath) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_json(p)?).expect("values always serialize"))
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Result<Value> {
    serde_json::to_value(x).map_err(|e| Error::internal(e.to_string()))
}

macro_rules! representation {
    ($ty:ident, $name:literal, $desc:literal, |$p:ident| $body:expr) => {
        pub struct $ty;

        impl Named for $ty {
            fn name(&self) -> &'static str {
                $name
            }

            fn description(&self) -> &'static str {
                $desc
            }
        }

        impl Representation for $ty {
            fn to_json(&self, $p: &DyckPath) -> Result<Value> {
                $body
            }
        }
    };
}

representation!(MatrixTarget, "matrix", "d x m binary Dyck matrix", |p| to_value(&path_to_matrix(p)));
representation!(ExtendedTarget, "extended", "d x (d+m) signed matrix with identity prefix", |p| {
    to_value(&phi(&path_to_matrix(p)))
});
representation!(BasesTarget, "bases", "bases from nonzero maximal minors", |p| {
    to_value(&positroid_of_path(p)?)
});
representation!(NecklaceTarget, "necklace", "Grassmann necklace of lex-minimal bases", |p| {
    to_value(&necklace_from_bases(&positroid_of_path(p)?)?)
});
representation!(LeTarget, "le", "Le-diagram", |p| to_value(&le_from_path(p)));
representation!(PlabicTarget, "plabic", "tree plabic graph", |p| to_value(&build_plabic(p)));

pub struct PermTarget;

impl Named for PermTarget {
    fn name(&self) -> &'static str {
        "perm"
    }

    fn description(&self) -> &'static str {
        "decorated permutation with its cycle string"
    }
}

impl Representation for PermTarget {
    fn to_json(&self, p: &DyckPath) -> Result<Value> {
        let pi = southwest_perm(p);
        let mut v = to_value(&pi)?;
        v["cycle"] = json!(pi.cycle_string());
        Ok(v)
    }

    fn to_text(&self, p: &DyckPath) -> Result<String> {
        Ok(southwest_perm(p).cycle_string())
    }
}

pub struct GeneralPolytopeTarget;

impl Named for GeneralPolytopeTarget {
    fn name(&self) -> &'static str {
        "polytope-general"
    }

    fn description(&self) -> &'static str {
        "cyclic-window inequalities from the necklace"
    }
}

impl Representation for GeneralPolytopeTarget {
    fn to_json(&self, p: &DyckPath) -> Result<Value> {
        to_value(&general(p)?)
    }

    fn to_text(&self, p: &DyckPath) -> Result<String> {
        Ok(general(p)?.to_string())
    }
}

fn general(p: &DyckPath) -> Result<HPolytope> {
    Ok(hrep_general(&necklace_from_bases(&positroid_of_path(p)?)?))
}

pub struct RefinedPolytopeTarget;

impl Named for RefinedPolytopeTarget {
    fn name(&self) -> &'static str {
        "polytope-refined"
    }

    fn description(&self) -> &'static str {
        "short system read off the column profile"
    }
}

impl Representation for RefinedPolytopeTarget {
    fn to_json(&self, p: &DyckPath) -> Result<Value> {
        to_value(&hrep_refined(&ColumnProfile::from_path(p))?)
    }

    fn to_text(&self, p: &DyckPath) -> Result<String> {
        Ok(hrep_refined(&ColumnProfile::from_path(p))?.to_string())
    }
}

pub fn representations() -> Registry<dyn Representation> {
    Registry::<dyn Representation>::new("representation")
        .with(Box::new(MatrixTarget))
        .with(Box::new(ExtendedTarget))
        .with(Box::new(BasesTarget))
        .with(Box::new(NecklaceTarget))
        .with(Box::new(PermTarget))
        .with(Box::new(LeTarget))
        .with(Box::new(PlabicTarget))
        .with(Box::new(GeneralPolytopeTarget))
        .with(Box::new(RefinedPolytopeTarget))
}
