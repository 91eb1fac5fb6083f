//! Built-in complexes: simplices and their skeleta, small triangulations of the
//! projective plane and the dunce hat, and two non-shellable 3-balls.
//!
//! Entries that come from facet lists live in `data/` and are verified when loaded.
//! Vertex labels start at 1.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::cm::check_ball_necessary;
use crate::complex::{Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::io::parse_plain;

pub const DATA_DIR_ENV: &str = "MINCM_DATA_DIR";

pub const RP2_6_DATA: &str = include_str!("../data/rp2_6.txt");
pub const DUNCE_HAT_8_DATA: &str = include_str!("../data/dunce_hat_8.txt");
pub const RUDIN_BALL_DATA: &str = include_str!("../data/rudin_ball.txt");
pub const NONSHELLABLE_BALL_10_DATA: &str = include_str!("../data/nonshellable_ball_10.txt");

/// Names reserved for complexes whose facet lists are not shipped. A file
/// `<name>.txt` in the data directory supplies one.
pub const RESERVED: &[&str] = &["ziegler_ball", "bings_house", "pastry", "dg16_c3", "jv17_c3", "dg18_omega3"];

/// Entries that must pass [`check_ball_necessary`] when loaded, including from the data directory.
const BALLS: &[&str] = &["rudin_ball", "nonshellable_ball_10", "ziegler_ball"];

/// Expected verdicts over one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedProperties {
    pub field: FieldSpec,
    pub acyclic: bool,
    pub is_cm: bool,
    pub is_minimal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub provenance: String,
    pub n: usize,
    pub num_facets: usize,
    pub f_vector: Vec<u64>,
    /// Whether `get` also runs [`check_ball_necessary`] on the entry.
    pub is_ball: bool,
    pub expected: Vec<ExpectedProperties>,
}

fn exp(field: FieldSpec, acyclic: bool, is_cm: bool, is_minimal: bool) -> ExpectedProperties {
    ExpectedProperties { field, acyclic, is_cm, is_minimal }
}

fn all_fields(acyclic: bool, is_cm: bool, is_minimal: bool) -> Vec<ExpectedProperties> {
    [FieldSpec::Rational, FieldSpec::GF2, FieldSpec::GF3]
        .into_iter()
        .map(|f| exp(f, acyclic, is_cm, is_minimal))
        .collect()
}

/// The fixed entries with their expected properties. Parametrised families are
/// represented by one member each.
pub fn entries() -> Vec<CatalogEntry> {
    let e = |name: &str, provenance: &str, n, facets, f: &[u64], is_ball, expected| CatalogEntry {
        name: name.into(),
        provenance: provenance.into(),
        n,
        num_facets: facets,
        f_vector: f.to_vec(),
        is_ball,
        expected,
    };
    vec![
        e("simplex(4)", "full simplex on 4 vertices", 4, 1, &[1, 4, 6, 4, 1], true, all_fields(true, true, false)),
        e(
            "boundary_simplex(4)",
            "boundary of the tetrahedron, a 2-sphere",
            4,
            4,
            &[1, 4, 6, 4],
            false,
            all_fields(false, true, false),
        ),
        e(
            "k_6_2",
            "complete 2-skeleton of the simplex on 6 vertices",
            6,
            20,
            &[1, 6, 15, 20],
            false,
            all_fields(false, true, false),
        ),
        e(
            "octahedron",
            "boundary of the octahedron, antipodal pairs {1,2} {3,4} {5,6}",
            6,
            8,
            &[1, 6, 12, 8],
            false,
            all_fields(false, true, false),
        ),
        e(
            "rp2_6",
            "six-vertex real projective plane (data/rp2_6.txt)",
            6,
            10,
            &[1, 6, 15, 10],
            false,
            vec![
                exp(FieldSpec::Rational, true, true, true),
                exp(FieldSpec::GF2, false, false, false),
                exp(FieldSpec::GF3, true, true, true),
            ],
        ),
        e(
            "dunce_hat_8",
            "8-vertex dunce hat (data/dunce_hat_8.txt)",
            8,
            17,
            &[1, 8, 24, 17],
            false,
            all_fields(true, true, true),
        ),
        e(
            "rudin_ball",
            "Rudin's unshellable 3-ball (data/rudin_ball.txt)",
            14,
            41,
            &[1, 14, 66, 94, 41],
            true,
            all_fields(true, true, true),
        ),
        e(
            "nonshellable_ball_10",
            "strongly non-shellable 3-ball on 10 vertices, 21 facets (data/nonshellable_ball_10.txt)",
            10,
            21,
            &[1, 10, 38, 50, 21],
            true,
            all_fields(true, true, true),
        ),
    ]
}

/// Names accepted by [`get`], with parameters shown symbolically.
pub fn names() -> Vec<&'static str> {
    vec![
        "simplex(n)",
        "boundary_simplex(n)",
        "skeleton(n,i)",
        "k_6_2",
        "octahedron",
        "rp2_6",
        "dunce_hat_8",
        "rudin_ball",
        "nonshellable_ball_10",
    ]
}

pub fn simplex(n: usize) -> SimplicialComplex {
    let f = Face::new((0..n as VertexId).collect());
    SimplicialComplex::from_id_facets(n, vec![f]).expect("simplex").one_based()
}

pub fn boundary_simplex(n: usize) -> SimplicialComplex {
    if n == 0 {
        return SimplicialComplex::void(0);
    }
    let full = Face::new((0..n as VertexId).collect());
    SimplicialComplex::from_id_facets(n, full.ridges().collect()).expect("boundary").one_based()
}

/// The `i`-skeleton of the simplex on `n` vertices (`K_{n,i}`).
pub fn skeleton(n: usize, i: isize) -> Result<SimplicialComplex> {
    if i < -1 || i >= n as isize {
        return Err(Error::SkeletonOutOfRange { requested: i, max: n as isize - 1 });
    }
    simplex(n).skeleton(i)
}

pub fn octahedron() -> SimplicialComplex {
    let mut facets = Vec::new();
    for a in [1, 2] {
        for b in [3, 4] {
            for c in [5, 6] {
                facets.push(vec![a, b, c]);
            }
        }
    }
    let refs: Vec<&[i64]> = facets.iter().map(|f| f.as_slice()).collect();
    SimplicialComplex::from_int_facets(&refs)
}

fn parse_data(name: &str, text: &str) -> Result<SimplicialComplex> {
    let parsed = parse_plain(text)?;
    if parsed.dropped != 0 {
        return Err(Error::CatalogVerification {
            name: name.into(),
            reason: format!("{} redundant facets in data file", parsed.dropped),
        });
    }
    Ok(parsed.complex)
}

fn verified_ball(name: &str, text: &str) -> Result<SimplicialComplex> {
    let c = parse_data(name, text)?;
    let check = check_ball_necessary(&c, FieldSpec::Rational);
    if !check.passes() {
        return Err(Error::CatalogVerification {
            name: name.into(),
            reason: format!("failed ball checks: {check:?}"),
        });
    }
    Ok(c)
}

fn parse_args(rest: &str) -> Option<Vec<isize>> {
    let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
    inner.split(',').map(|s| s.trim().parse().ok()).collect()
}

/// Location of a user-supplied facet file for a reserved name.
pub fn data_path(name: &str) -> Option<PathBuf> {
    let dir = std::env::var_os(DATA_DIR_ENV)?;
    Some(PathBuf::from(dir).join(format!("{name}.txt")))
}

pub fn get(name: &str) -> Result<SimplicialComplex> {
    let name = name.trim();
    let unknown = || Error::UnknownCatalogEntry(name.to_string());
    if let Some(path) = data_path(name) {
        if path.is_file() {
            let text = std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            return if BALLS.contains(&name) { verified_ball(name, &text) } else { parse_data(name, &text) };
        }
    }
    match name {
        "k_6_2" => return skeleton(6, 2),
        "octahedron" => return Ok(octahedron()),
        "rp2_6" => return parse_data(name, RP2_6_DATA),
        "dunce_hat_8" => return parse_data(name, DUNCE_HAT_8_DATA),
        "rudin_ball" => return verified_ball(name, RUDIN_BALL_DATA),
        "nonshellable_ball_10" => return verified_ball(name, NONSHELLABLE_BALL_10_DATA),
        _ => {}
    }
    if RESERVED.contains(&name) {
        return Err(Error::DataNotBundled(format!(
            "{name}: place a plain-text facet file at ${DATA_DIR_ENV}/{name}.txt"
        )));
    }
    let (head, rest) = name.split_at(name.find('(').ok_or_else(unknown)?);
    let args = parse_args(rest).ok_or_else(unknown)?;
    let size = |a: isize| usize::try_from(a).map_err(|_| Error::InvalidArgument(format!("negative size in {name}")));
    match (head, args.as_slice()) {
        ("simplex", &[n]) => Ok(simplex(size(n)?)),
        ("boundary_simplex", &[n]) => Ok(boundary_simplex(size(n)?)),
        ("skeleton", &[n, i]) => skeleton(size(n)?, i),
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parametrised_entries() {
        assert_eq!(get("simplex(3)").unwrap().f_vector().0, vec![1, 3, 3, 1]);
        let b = get("boundary_simplex(4)").unwrap();
        assert_eq!(b.num_facets(), 4);
        assert_eq!(b.reduced_euler_characteristic(), 1);
        assert_eq!(get("skeleton(6, 2)").unwrap(), get("k_6_2").unwrap());
        assert_eq!(get("k_6_2").unwrap().num_facets(), 20);
        assert!(matches!(get("skeleton(3,5)"), Err(Error::SkeletonOutOfRange { .. })));
        assert!(matches!(get("simplex(-1)"), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn unknown_and_reserved_names() {
        assert!(matches!(get("klein_bottle"), Err(Error::UnknownCatalogEntry(_))));
        assert!(matches!(get("simplex(1,2)"), Err(Error::UnknownCatalogEntry(_))));
        let err = get("bings_house").unwrap_err();
        assert!(err.to_string().contains("data not bundled"));
    }

    #[test]
    fn octahedron_is_a_sphere() {
        let o = octahedron();
        assert_eq!(o.f_vector().0, vec![1, 6, 12, 8]);
        assert!(o.is_pseudomanifold());
    }
}
