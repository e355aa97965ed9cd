//! JSON document shapes and canonical formatting.
//!
//! All rationals are emitted as gcd-reduced `"p/q"` strings with a
//! positive denominator; field order is fixed by the struct
//! declarations, so identical jobs produce byte-identical output.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use okbodies_core::cluster::{Seed, SeedContext};
use okbodies_core::okbody::RationalSimplex;
use okbodies_core::Rational;

pub fn rational_str(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational_f64(r: &Rational) -> f64 {
    let n = r.numer().to_f64().unwrap_or(f64::NAN);
    let d = r.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

/// Letters of a word rendered per the serialization rule: a comma-free
/// digit string for single-digit alphabets, comma-separated otherwise.
pub fn word_str(rank: usize, letters: &[u8]) -> String {
    if rank <= 9 {
        letters.iter().map(|l| l.to_string()).collect()
    } else {
        letters
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[derive(Serialize)]
pub struct RootEntry {
    pub root: Vec<i64>,
    pub height: i64,
    pub word: String,
}

#[derive(Serialize)]
pub struct RootsDoc {
    #[serde(rename = "type")]
    pub type_: String,
    pub order: Vec<u8>,
    pub roots: Vec<RootEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w: Option<Vec<u8>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inversion_set: Option<Vec<RootEntry>>,
}

#[derive(Serialize, Deserialize)]
pub struct SeedDoc {
    pub word: Vec<u8>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<i64>>,
    pub psi: Vec<Vec<i64>>,
    pub muhat: Vec<Vec<i64>>,
    pub nvec: Vec<Vec<String>>,
    /// Frozen indices, 1-based.
    pub frozen: Vec<usize>,
    pub depth: usize,
}

pub fn seed_doc(seed: &Seed, ctx: &SeedContext) -> SeedDoc {
    SeedDoc {
        word: ctx.word.letters().to_vec(),
        b: seed.b.clone(),
        psi: seed.psi.clone(),
        muhat: seed.muhat.clone(),
        nvec: seed
            .n_rays(ctx)
            .iter()
            .map(|row| row.iter().map(rational_str).collect())
            .collect(),
        frozen: ctx.j_fr.iter().map(|&j| j + 1).collect(),
        depth: seed.depth,
    }
}

#[derive(Serialize)]
pub struct EnumerateDoc {
    #[serde(rename = "type")]
    pub type_: String,
    pub order: Vec<u8>,
    pub word: Vec<u8>,
    pub finite: bool,
    pub count: usize,
    pub seeds: Vec<SeedDoc>,
}

#[derive(Serialize)]
pub struct PolytopeDoc {
    pub lambda: Vec<i64>,
    pub vertices: Vec<Vec<String>>,
    #[serde(rename = "N_rays")]
    pub n_rays_cap: Vec<Vec<i64>>,
    pub n_rays: Vec<Vec<String>>,
    pub volume: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub volume_float: Option<f64>,
}

pub fn polytope_doc(simplex: &RationalSimplex, ctx: &SeedContext, with_float: bool) -> PolytopeDoc {
    PolytopeDoc {
        lambda: ctx.lambda.clone(),
        vertices: simplex
            .vertices
            .iter()
            .map(|v| v.iter().map(rational_str).collect())
            .collect(),
        n_rays_cap: simplex.normals_cap.clone(),
        n_rays: simplex
            .normals
            .iter()
            .map(|v| v.iter().map(rational_str).collect())
            .collect(),
        volume: rational_str(&simplex.volume),
        volume_float: with_float.then(|| rational_f64(&simplex.volume)),
    }
}

#[derive(Serialize)]
pub struct PolytopesDoc {
    #[serde(rename = "type")]
    pub type_: String,
    pub order: Vec<u8>,
    pub word: Vec<u8>,
    pub finite: bool,
    pub total: PolytopeDoc,
    pub seeds: Vec<PolytopeDoc>,
}

#[derive(Serialize)]
pub struct CorhookDoc {
    pub lhs: String,
    pub rhs: String,
}

#[derive(Serialize)]
pub struct PetersonProctorDoc {
    pub hook: String,
    pub reduced_words: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Serialize)]
pub struct VerifyDoc {
    pub w: Vec<u8>,
    pub order: Vec<u8>,
    pub lhs_forms: Vec<Vec<i64>>,
    pub seeds: usize,
    pub verdict: bool,
    pub corhook: CorhookDoc,
    pub peterson_proctor: PetersonProctorDoc,
}

/// Seed files accepted by `verify --seeds`: either a bare array of
/// seed objects or any object with a `seeds` array (e.g. the output of
/// `enumerate`).
#[derive(Deserialize)]
#[serde(untagged)]
pub enum SeedFile {
    Wrapped { seeds: Vec<SeedPsiOnly> },
    Bare(Vec<SeedPsiOnly>),
}

/// The only field verification needs from a stored seed.
#[derive(Deserialize)]
pub struct SeedPsiOnly {
    pub psi: Vec<Vec<i64>>,
}

impl SeedFile {
    pub fn into_psis(self) -> Vec<Vec<Vec<i64>>> {
        match self {
            SeedFile::Wrapped { seeds } => seeds.into_iter().map(|s| s.psi).collect(),
            SeedFile::Bare(seeds) => seeds.into_iter().map(|s| s.psi).collect(),
        }
    }
}

pub fn to_pretty(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}
