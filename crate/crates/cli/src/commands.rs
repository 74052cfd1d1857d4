//! Thin wrappers over the library used by the subcommands.

use std::fs::OpenOptions;
use std::io::{Seek, SeekFrom, Write};
use std::ops::ControlFlow;
use std::path::Path;

use serde::{Deserialize, Serialize};

use kfree_core::constructions::{
    example_3sat_twinfree, example_3sat_unbounded, example_no_small_blowup, example_rsat_twinfree, extremal_family,
    groetzsch, lambda25_gadget, lambda35_gadget, turan_graph, Construction, Variant,
};
use kfree_core::graph::{from_graph6, to_graph6, twin_classes, EnumerationPlan, Filter, Graph};
use kfree_core::invariants::{aes_peel, chromatic_number_with_budget, clique_number};
use kfree_core::lambda::{extremal_size_estimate, lambda_of, optimal_blowup, BlowupOptimum};
use kfree_core::saturation::{is_saturated, saturate};
use kfree_core::tripartite::{extract_tripartite, TripartiteCertificate};

use crate::resume::Cursor;
use crate::CliError;

/// Parameters shared by the constructors.
#[derive(Debug, Clone, Copy, Default)]
pub struct Params {
    pub n: Option<usize>,
    pub r: Option<usize>,
    pub l: Option<usize>,
    pub m: Option<usize>,
    pub f: Option<usize>,
    pub prime: bool,
    pub exclude_empty: bool,
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("family {family} needs --{flag}")))
}

pub const FAMILIES: [&str; 11] = [
    "turan",
    "extremal",
    "groetzsch",
    "lambda35",
    "lambda25",
    "3sat-unbounded",
    "no-small-blowup",
    "3sat-twinfree",
    "rsat-twinfree",
    "cycle",
    "complete",
];

pub fn construct(family: &str, p: Params) -> Result<Construction, CliError> {
    let bad = |e: kfree_core::constructions::ConstructionError| CliError::Usage(e.to_string());
    let plain = |graph: Graph| Construction { graph, groups: Vec::new() };
    Ok(match family {
        "turan" => plain(turan_graph(need(p.n, "n", family)?, need(p.r, "r", family)?.max(1))),
        "extremal" => {
            let variant = if p.prime { Variant::Prime } else { Variant::Plain };
            extremal_family(need(p.n, "n", family)?, need(p.r, "r", family)?, p.l.unwrap_or(1), variant).map_err(bad)?
        }
        "groetzsch" => plain(groetzsch()),
        "lambda35" => lambda35_gadget(),
        "lambda25" => lambda25_gadget(!p.exclude_empty),
        "3sat-unbounded" => example_3sat_unbounded(need(p.f, "f", family)?, need(p.n, "n", family)?).map_err(bad)?,
        "no-small-blowup" => {
            example_no_small_blowup(need(p.m, "m", family)?, need(p.r, "r", family)?, need(p.n, "n", family)?)
                .map_err(bad)?
        }
        "3sat-twinfree" => example_3sat_twinfree(need(p.m, "m", family)?).map_err(bad)?,
        "rsat-twinfree" => example_rsat_twinfree(need(p.m, "m", family)?, need(p.r, "r", family)?).map_err(bad)?,
        "cycle" => plain(Graph::cycle(need(p.n, "n", family)?)),
        "complete" => plain(Graph::complete(need(p.n, "n", family)?)),
        other => {
            return Err(CliError::Usage(format!(
                "unknown family {other}; expected one of {}",
                FAMILIES.join(", ")
            )))
        }
    })
}

#[derive(Debug, Serialize)]
pub struct ConstructionView {
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub groups: Vec<(String, Vec<usize>)>,
}

pub fn construction_view(c: &Construction) -> Result<ConstructionView, CliError> {
    Ok(ConstructionView {
        graph6: to_graph6(&c.graph).map_err(|e| CliError::Format(e.to_string()))?,
        order: c.graph.order(),
        size: c.graph.size(),
        groups: c.groups.clone(),
    })
}

/// Parses one graph per non-empty line.
pub fn read_graphs(text: &str) -> Result<Vec<Graph>, CliError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .enumerate()
        .map(|(i, l)| from_graph6(l).map_err(|e| CliError::Format(format!("line {}: {e}", i + 1))))
        .collect()
}

#[derive(Debug, Serialize)]
pub struct SaturationView {
    pub q: usize,
    pub is_free: bool,
    pub is_saturated: bool,
    pub missing: Vec<(usize, usize)>,
}

#[derive(Debug, Serialize)]
pub struct Analysis {
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub clique_number: usize,
    pub clique: Vec<usize>,
    pub chromatic_number: Option<usize>,
    pub chromatic_lower: usize,
    pub chromatic_upper: usize,
    pub twin_classes: usize,
    pub saturation: SaturationView,
    pub lambda: Option<usize>,
    pub lambda_clique: Option<Vec<usize>>,
    pub peeled: Option<usize>,
}

pub fn analyze(g: &Graph, budget: u64) -> Result<Analysis, CliError> {
    let (omega, clique) = clique_number(g);
    let (chi, lo, hi) = match chromatic_number_with_budget(g, budget) {
        Ok((c, _)) => (Some(c), c, c),
        Err(e) => (None, e.lower, e.upper),
    };
    let q = (omega + 1).max(3);
    let sat = is_saturated(g, q).expect("q is at least 3");
    let lambda = (omega >= 1).then(|| lambda_of(g, omega).expect("omega is exact"));
    Ok(Analysis {
        graph6: to_graph6(g).map_err(|e| CliError::Format(e.to_string()))?,
        order: g.order(),
        size: g.size(),
        clique_number: omega,
        clique,
        chromatic_number: chi,
        chromatic_lower: lo,
        chromatic_upper: hi,
        twin_classes: twin_classes(g).len(),
        saturation: SaturationView {
            q,
            is_free: sat.is_free,
            is_saturated: sat.is_saturated,
            missing: sat.missing().collect(),
        },
        lambda: lambda.as_ref().map(|l| l.value),
        lambda_clique: lambda.map(|l| l.clique),
        peeled: (omega >= 2).then(|| aes_peel(g, omega).map(|p| p.removed.len()).ok()).flatten(),
    })
}

pub fn parse_filter(name: &str, r: Option<usize>) -> Result<Filter, CliError> {
    match name {
        "none" => Ok(Filter::None),
        "triangle-free" => Ok(Filter::CliqueFree(3)),
        "k4-free" => Ok(Filter::CliqueFree(4)),
        "kr1-free" => r
            .map(|r| Filter::CliqueFree(r + 1))
            .ok_or_else(|| CliError::Usage("filter kr1-free needs --r".into())),
        other => Err(CliError::Usage(format!(
            "unknown filter {other}; expected none, triangle-free, k4-free or kr1-free"
        ))),
    }
}

#[derive(Debug, Default, Serialize, Deserialize)]
struct EnumerateState {
    bytes: u64,
    count: u64,
}

/// Writes every class of order `n` as graph6 lines; returns the count.
///
/// With `resume`, output must go to a file, which is truncated to the
/// last checkpoint before continuing.
pub fn enumerate_to(
    n: usize,
    filter: Filter,
    out: Option<&Path>,
    resume: Option<&Path>,
    stdout: &mut dyn Write,
) -> Result<u64, CliError> {
    let plan = EnumerationPlan::new(n, filter, n.min(6))?;
    let Some(path) = out else {
        if resume.is_some() {
            return Err(CliError::Usage("--resume needs --out".into()));
        }
        let mut count = 0;
        for i in 0..plan.len() {
            let mut err = None;
            let _ = plan.run_chunk(i, |g| {
                count += 1;
                match writeln!(stdout, "{}", to_graph6(g).expect("enumerated orders fit")) {
                    Ok(()) => ControlFlow::Continue(()),
                    Err(e) => {
                        err = Some(e);
                        ControlFlow::Break(())
                    }
                }
            });
            if let Some(e) = err {
                return Err(e.into());
            }
        }
        return Ok(count);
    };
    let key = format!("enumerate:n={n}:filter={filter:?}");
    let (cursor, saved) = Cursor::open(resume, &key, plan.len())?;
    let mut state: EnumerateState = saved.unwrap_or_default();
    let mut file = OpenOptions::new()
        .create(true)
        .write(true)
        .truncate(cursor.start == 0)
        .open(path)?;
    file.set_len(state.bytes)?;
    file.seek(SeekFrom::Start(state.bytes))?;
    for i in cursor.start..plan.len() {
        let mut buf = String::new();
        let _ = plan.run_chunk(i, |g| {
            state.count += 1;
            buf.push_str(&to_graph6(g).expect("enumerated orders fit"));
            buf.push('\n');
            ControlFlow::Continue(())
        });
        file.write_all(buf.as_bytes())?;
        file.flush()?;
        state.bytes += buf.len() as u64;
        cursor.commit(i, &state)?;
    }
    Ok(state.count)
}

pub fn saturate_graph(g: &Graph, q: usize) -> Result<Graph, CliError> {
    saturate(g, q).map_err(|e| CliError::Usage(e.to_string()))
}

#[derive(Debug, Serialize)]
pub struct BlowupView {
    #[serde(flatten)]
    pub optimum: BlowupOptimum,
    pub n: usize,
    /// `r·t(n, r) - Λ·n`; the estimate is this divided by `r`.
    pub estimate_scaled: Option<i64>,
}

pub fn blowup(g: &Graph, n: usize) -> Result<BlowupView, CliError> {
    let optimum = optimal_blowup(g, n).map_err(|e| CliError::Usage(e.to_string()))?;
    let estimate_scaled = extremal_size_estimate(n, optimum.r, optimum.r + 1, optimum.lambda)
        .ok()
        .map(|e| e.numerator);
    Ok(BlowupView {
        optimum,
        n,
        estimate_scaled,
    })
}

pub fn tripartite(g: &Graph, c_param: usize) -> Result<TripartiteCertificate, CliError> {
    match extract_tripartite(g, c_param) {
        Ok(c) => Ok(c),
        Err(kfree_core::tripartite::TripartiteError::Certificate(m)) => Err(CliError::Mismatch(m)),
        Err(e) => Err(CliError::Usage(e.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construct_families() {
        let g = construct("groetzsch", Params::default()).unwrap().graph;
        assert_eq!(g.order(), 11);
        let p = Params {
            n: Some(8),
            r: Some(2),
            l: Some(2),
            prime: true,
            ..Params::default()
        };
        assert_eq!(construct("extremal", p).unwrap().graph.size(), 13);
        assert!(matches!(construct("nope", Params::default()), Err(CliError::Usage(_))));
        assert!(matches!(construct("turan", Params::default()), Err(CliError::Usage(_))));
    }

    #[test]
    fn analyze_turan() {
        let a = analyze(&turan_graph(9, 3), 1 << 20).unwrap();
        assert_eq!((a.clique_number, a.chromatic_number, a.twin_classes), (3, Some(3), 3));
        assert!(a.saturation.is_saturated);
        assert_eq!(a.saturation.q, 4);
        assert_eq!(a.lambda, Some(0));
    }

    #[test]
    fn filters() {
        assert_eq!(parse_filter("kr1-free", Some(3)).unwrap(), Filter::CliqueFree(4));
        assert!(parse_filter("kr1-free", None).is_err());
        assert!(parse_filter("bogus", None).is_err());
    }

    #[test]
    fn enumerate_to_stdout() {
        let mut out = Vec::new();
        let count = enumerate_to(5, Filter::triangle_free(), None, None, &mut out).unwrap();
        assert_eq!(count, 14);
        assert_eq!(String::from_utf8(out).unwrap().lines().count(), 14);
    }
}
