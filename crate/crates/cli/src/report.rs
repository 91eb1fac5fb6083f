//! Report documents and their text renderings.

use std::fmt::Write as _;
use std::time::Instant;

use clap::ValueEnum;
use mincm::catalog;
use mincm::{
    betti_table, depth, dual_ideal, free_facets, has_linear_quotients, is_acyclic, is_cm, is_minimal_cm,
    is_strongly_cm, reduced_homology, BettiTable, Error, Face, FieldSpec, ShellingCertificate, SimplicialComplex,
    SquarefreeIdeal,
};
use serde::{Deserialize, Serialize};

pub struct Outcome {
    pub text: String,
    pub property_holds: bool,
}

impl Outcome {
    pub fn ok(text: String) -> Self {
        Outcome { text, property_holds: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Cm,
    NotCm,
    Minimal,
    NotMinimal,
    Acyclic,
    StronglyCm,
}

type Labels = Vec<String>;

fn labels(c: &SimplicialComplex, f: &Face) -> Labels {
    c.face_labels(f)
}

fn fmt_face(l: &[String]) -> String {
    format!("{{{}}}", l.join(","))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes") + "\n"
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub face: Labels,
    /// `i - 1` where `H̃_{i-1}(lk face) ≠ 0`.
    pub homology_degree: isize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RidgeBound {
    pub l: usize,
    pub max_boundary_ridges: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Minimality {
    pub field: FieldSpec,
    pub is_minimal: bool,
    pub method: String,
    pub ridge_bound: Option<RidgeBound>,
    pub removable_facets: Vec<Labels>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub input: String,
    pub field: FieldSpec,
    pub n: usize,
    pub dim: isize,
    pub num_facets: usize,
    pub pure: bool,
    pub f_vector: Vec<u64>,
    pub h_vector: Option<Vec<i64>>,
    /// Reduced Betti numbers, index 0 holding `H̃_{-1}`.
    pub reduced_betti: Vec<usize>,
    pub acyclic: bool,
    pub depth: Option<usize>,
    pub is_cm: bool,
    pub cm_witness: Option<Witness>,
    pub minimality: Option<Minimality>,
    pub strongly_cm: Option<bool>,
    pub boundary_ridges: usize,
    pub free_facets: Option<Vec<Labels>>,
    pub shelling: Option<Vec<Labels>>,
    pub shellable: Option<bool>,
    pub elapsed_ms: u64,
}

impl AnalysisReport {
    fn holds(&self, p: Property) -> bool {
        let minimal = self.minimality.as_ref().is_some_and(|m| m.is_minimal);
        match p {
            Property::Cm => self.is_cm,
            Property::NotCm => !self.is_cm,
            Property::Minimal => minimal,
            Property::NotMinimal => !minimal,
            Property::Acyclic => self.acyclic,
            Property::StronglyCm => self.strongly_cm == Some(true),
        }
    }

    fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "input: {}", self.input);
        let _ = writeln!(s, "field: {}", self.field);
        let _ = writeln!(
            s,
            "vertices: {}  dim: {}  facets: {}  pure: {}",
            self.n, self.dim, self.num_facets, self.pure
        );
        let _ = writeln!(s, "f-vector: {:?}", self.f_vector);
        if let Some(h) = &self.h_vector {
            let _ = writeln!(s, "h-vector: {h:?}");
        }
        let _ = writeln!(s, "reduced Betti (from degree -1): {:?}", self.reduced_betti);
        let _ = writeln!(s, "acyclic: {}", self.acyclic);
        if let Some(d) = self.depth {
            let _ = writeln!(s, "depth: {d}");
        }
        let _ = write!(s, "cohen-macaulay over {}: {}", self.field, self.is_cm);
        if let Some(w) = &self.cm_witness {
            let _ = write!(s, " (H~_{} of the link of {} is nonzero)", w.homology_degree, fmt_face(&w.face));
        }
        s.push('\n');
        if let Some(m) = &self.minimality {
            let _ = write!(s, "minimal CM over {}: {} [{}]", m.field, m.is_minimal, m.method);
            if let Some(r) = &m.ridge_bound {
                let _ = write!(s, " l = {}, at most {} boundary ridges per facet", r.l, r.max_boundary_ridges);
            }
            s.push('\n');
            if !m.removable_facets.is_empty() {
                let list: Vec<String> = m.removable_facets.iter().map(|f| fmt_face(f)).collect();
                let _ = writeln!(s, "removable facets: {}", list.join(" "));
            }
        }
        if let Some(strong) = self.strongly_cm {
            let _ = writeln!(s, "strongly CM: {strong}");
        }
        let _ = writeln!(s, "boundary ridges: {}", self.boundary_ridges);
        if let Some(free) = &self.free_facets {
            let list: Vec<String> = free.iter().map(|f| fmt_face(f)).collect();
            let _ = writeln!(s, "free facets: {}", if list.is_empty() { "none".to_string() } else { list.join(" ") });
        }
        if let Some(sh) = self.shellable {
            let _ = writeln!(s, "shellable: {sh}");
            if let Some(order) = &self.shelling {
                let list: Vec<String> = order.iter().map(|f| fmt_face(f)).collect();
                let _ = writeln!(s, "shelling: {}", list.join(" "));
            }
        }
        let _ = writeln!(s, "elapsed: {} ms", self.elapsed_ms);
        s
    }
}

pub fn analyze(
    input: &str,
    c: &SimplicialComplex,
    field: FieldSpec,
    fast: bool,
    shell: bool,
    expect: &[Property],
    json: bool,
) -> Result<Outcome, Error> {
    let start = Instant::now();
    let void = c.is_void();
    let cm = is_cm(c, field);
    let minimality = (cm.is_cm).then(|| {
        let m = is_minimal_cm(c, field, fast);
        Minimality {
            field,
            is_minimal: m.is_minimal,
            method: if m.fast_path.is_some() { "ridge-bound certificate" } else { "brute force" }.into(),
            ridge_bound: m.fast_path.map(|r| RidgeBound {
                l: r.l,
                max_boundary_ridges: r.max_boundary_ridges,
            }),
            removable_facets: m.removable_facets.iter().map(|f| labels(c, f)).collect(),
        }
    });
    let strongly_cm = minimality.as_ref().map(|_| is_strongly_cm(c, field));
    let free = if c.is_pure() && !void {
        Some(free_facets(c)?.iter().map(|f| labels(c, f)).collect())
    } else {
        None
    };
    let (shellable, shelling) = if shell && c.is_pure() {
        let cert = mincm::is_shellable(c)?;
        (
            Some(cert.is_some()),
            cert.map(|k| k.moves.iter().map(|f| labels(c, f)).collect()),
        )
    } else {
        (None, None)
    };
    let report = AnalysisReport {
        input: input.into(),
        field,
        n: c.n(),
        dim: c.dim(),
        num_facets: c.num_facets(),
        pure: c.is_pure(),
        f_vector: c.f_vector().0,
        h_vector: c.h_vector().ok().map(|h| h.0),
        reduced_betti: reduced_homology(c, field).0,
        acyclic: !void && is_acyclic(c, field),
        depth: depth(c, field).ok(),
        is_cm: cm.is_cm,
        cm_witness: cm.witness.map(|w| Witness {
            face: labels(c, &w.face),
            homology_degree: w.degree,
        }),
        minimality,
        strongly_cm,
        boundary_ridges: c.boundary_ridges().len(),
        free_facets: free,
        shelling,
        shellable,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    let holds = expect.iter().all(|&p| report.holds(p));
    Ok(Outcome {
        text: if json { to_json(&report) } else { report.render() },
        property_holds: holds,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReduceReport {
    pub input: String,
    pub field: FieldSpec,
    pub removed: usize,
    pub minimal_facets: Vec<Labels>,
    pub moves: Vec<Labels>,
}

pub fn reduced(
    input: &str,
    field: FieldSpec,
    minimal: &SimplicialComplex,
    cert: &ShellingCertificate,
    json: bool,
) -> Outcome {
    let r = ReduceReport {
        input: input.into(),
        field,
        removed: cert.len(),
        minimal_facets: minimal.facets().iter().map(|f| labels(minimal, f)).collect(),
        moves: cert.moves.iter().map(|f| labels(&cert.target, f)).collect(),
    };
    if json {
        return Outcome::ok(to_json(&r));
    }
    let mut s = String::new();
    let _ = writeln!(s, "input: {}", r.input);
    let _ = writeln!(s, "field: {}", r.field);
    let _ = writeln!(
        s,
        "minimal CM complex with {} facets, shelled back up by {} moves",
        r.minimal_facets.len(),
        r.removed
    );
    let facets: Vec<String> = r.minimal_facets.iter().map(|f| fmt_face(f)).collect();
    let _ = writeln!(s, "minimal: {}", if facets.is_empty() { "<void>".into() } else { facets.join(" ") });
    let moves: Vec<String> = r.moves.iter().map(|f| fmt_face(f)).collect();
    let _ = writeln!(s, "moves: {}", moves.join(" "));
    Outcome::ok(s)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShellingReport {
    pub input: String,
    pub base: Option<String>,
    pub found: bool,
    pub moves: Option<Vec<Labels>>,
}

pub fn shelling(input: &str, base: Option<&str>, cert: Option<&ShellingCertificate>, expect: bool, json: bool) -> Outcome {
    let r = ShellingReport {
        input: input.into(),
        base: base.map(String::from),
        found: cert.is_some(),
        moves: cert.map(|k| k.moves.iter().map(|f| labels(&k.target, f)).collect()),
    };
    let text = if json {
        to_json(&r)
    } else {
        let mut s = String::new();
        match (&r.base, &r.moves) {
            (None, Some(m)) => {
                let _ = writeln!(s, "shellable: true ({} facets)", m.len());
            }
            (None, None) => s.push_str("shellable: false\n"),
            (Some(b), Some(m)) => {
                let _ = writeln!(s, "shelled over {b}: true ({} moves)", m.len());
            }
            (Some(b), None) => {
                let _ = writeln!(s, "shelled over {b}: false");
            }
        }
        if let Some(m) = &r.moves {
            let list: Vec<String> = m.iter().map(|f| fmt_face(f)).collect();
            let _ = writeln!(s, "order: {}", list.join(" "));
        }
        s
    };
    Outcome {
        text,
        property_holds: !expect || r.found,
    }
}

/// Generator of an ideal on the vertices of `c`, as vertex labels.
fn generator_labels(c: &SimplicialComplex, g: &Face) -> Labels {
    labels(c, g)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DualReport {
    pub input: String,
    pub n: usize,
    pub variables: Vec<String>,
    pub generators: Vec<Labels>,
    pub generator_degree: Option<usize>,
    pub linear_quotients: Option<Vec<Labels>>,
}

pub fn dual(input: &str, c: &SimplicialComplex, n: usize, json: bool) -> Result<Outcome, Error> {
    if n < c.n() {
        return Err(Error::UniverseTooSmall { n, needed: c.n() });
    }
    let c = c.with_universe(n);
    let ideal = dual_ideal(&c, n)?;
    let order = if ideal.is_unit() { None } else { has_linear_quotients(&ideal)? };
    let r = DualReport {
        input: input.into(),
        n,
        variables: c.labels().to_vec(),
        generators: ideal.generators.iter().map(|g| generator_labels(&c, g)).collect(),
        generator_degree: ideal.generator_degree(),
        linear_quotients: order.map(|o| o.iter().map(|g| generator_labels(&c, g)).collect()),
    };
    if json {
        return Ok(Outcome::ok(to_json(&r)));
    }
    let mono = |g: &Labels| {
        if g.is_empty() {
            "1".to_string()
        } else {
            g.iter().map(|l| format!("x{l}")).collect::<Vec<_>>().join("*")
        }
    };
    let mut s = String::new();
    let _ = writeln!(s, "input: {}", r.input);
    let _ = writeln!(s, "variables: {}", r.n);
    let _ = writeln!(s, "generators ({}):", r.generators.len());
    for g in &r.generators {
        let _ = writeln!(s, "  {}", mono(g));
    }
    match &r.linear_quotients {
        Some(o) => {
            let list: Vec<String> = o.iter().map(mono).collect();
            let _ = writeln!(s, "linear quotients: {}", list.join(", "));
        }
        None => s.push_str("linear quotients: none\n"),
    }
    Ok(Outcome::ok(s))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BettiReport {
    pub input: String,
    pub field: FieldSpec,
    pub ideal: String,
    pub n: usize,
    /// `(i, j, β_{i,j})`.
    pub betti: Vec<(usize, usize, usize)>,
    pub linear_resolution: bool,
}

pub fn betti(
    input: &str,
    c: &SimplicialComplex,
    n: usize,
    stanley_reisner: bool,
    field: FieldSpec,
    json: bool,
) -> Result<Outcome, Error> {
    if n < c.n() {
        return Err(Error::UniverseTooSmall { n, needed: c.n() });
    }
    let c = c.with_universe(n);
    let ideal = if stanley_reisner {
        SquarefreeIdeal::new(n, c.minimal_nonfaces())?
    } else {
        dual_ideal(&c, n)?
    };
    let table: BettiTable = betti_table(&ideal, field)?;
    let linear = ideal
        .generator_degree()
        .is_some_and(|d| table.entries.keys().all(|&(i, j)| j == i + d));
    let r = BettiReport {
        input: input.into(),
        field,
        ideal: if stanley_reisner { "stanley-reisner" } else { "alexander-dual" }.into(),
        n,
        betti: table.rows(),
        linear_resolution: linear,
    };
    if json {
        return Ok(Outcome::ok(to_json(&r)));
    }
    let mut s = String::new();
    let _ = writeln!(s, "input: {}", r.input);
    let _ = writeln!(s, "field: {}", r.field);
    let _ = writeln!(s, "ideal: {} ({} variables)", r.ideal, r.n);
    for (i, j, b) in &r.betti {
        let _ = writeln!(s, "  beta_{{{i},{j}}} = {b}");
    }
    let _ = writeln!(s, "linear resolution: {}", r.linear_resolution);
    Ok(Outcome::ok(s))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinimalCheckReport {
    pub input: String,
    pub field: FieldSpec,
    pub is_cm: bool,
    pub minimality: Minimality,
}

pub fn minimal_check(
    input: &str,
    c: &SimplicialComplex,
    field: FieldSpec,
    fast: bool,
    expect: bool,
    json: bool,
) -> Outcome {
    let m = is_minimal_cm(c, field, fast);
    let r = MinimalCheckReport {
        input: input.into(),
        field,
        is_cm: m.is_cm,
        minimality: Minimality {
            field,
            is_minimal: m.is_minimal,
            method: if m.fast_path.is_some() { "ridge-bound certificate" } else { "brute force" }.into(),
            ridge_bound: m.fast_path.map(|r| RidgeBound {
                l: r.l,
                max_boundary_ridges: r.max_boundary_ridges,
            }),
            removable_facets: m.removable_facets.iter().map(|f| labels(c, f)).collect(),
        },
    };
    let text = if json {
        to_json(&r)
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "input: {}", r.input);
        let _ = writeln!(s, "cohen-macaulay over {}: {}", r.field, r.is_cm);
        let _ = writeln!(
            s,
            "minimal CM over {}: {} [{}]",
            r.field, r.minimality.is_minimal, r.minimality.method
        );
        if !r.minimality.removable_facets.is_empty() {
            let list: Vec<String> = r.minimality.removable_facets.iter().map(|f| fmt_face(f)).collect();
            let _ = writeln!(s, "removable facets: {}", list.join(" "));
        }
        s
    };
    Outcome {
        text,
        property_holds: !expect || r.minimality.is_minimal,
    }
}

pub fn catalog_list(json: bool) -> Outcome {
    let names = catalog::names();
    if json {
        let entries = catalog::entries();
        let doc = serde_json::json!({ "names": names, "entries": entries });
        return Outcome::ok(to_json(&doc));
    }
    let mut s = String::new();
    for e in catalog::entries() {
        let _ = writeln!(s, "{:<22} {}", e.name, e.provenance);
    }
    let _ = writeln!(s, "parametrised: simplex(n) boundary_simplex(n) skeleton(n,i)");
    let _ = writeln!(s, "reserved (needs ${}): {}", catalog::DATA_DIR_ENV, catalog::RESERVED.join(" "));
    Outcome::ok(s)
}
