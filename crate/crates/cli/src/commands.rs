use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};
use ncdecomp::decomposition::{oracle_decide, parse_decomposition, write_decomposition, DEFAULT_EDGE_BUDGET};
use ncdecomp::discharging::ratio_string;
use ncdecomp::reducer::{ReductionOptions, ReductionOutcome};
use ncdecomp::{
    audit, classify, decompose_by_reduction, generate, parse_rotation_graph, verify as check, write_rotation_graph,
    Kind, OrientedDecomposition, RotationGraph, RuleSetId, Theorem, VerifyError,
};
use serde::Serialize;
use serde_json::json;

use crate::report;
use crate::Method;

pub const EDGE_BUDGET_VAR: &str = "DECOMP_ORACLE_EDGE_BUDGET";

pub const SUCCESS: u8 = 0;
pub const VIOLATED: u8 = 1;
pub const DIAGNOSTIC: u8 = 3;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

impl Failure {
    pub fn input(error: impl Into<anyhow::Error>) -> Self {
        Failure { code: 2, error: error.into() }
    }

    fn internal(error: impl Into<anyhow::Error>) -> Self {
        Failure { code: VIOLATED, error: error.into() }
    }
}

type CmdResult = Result<u8, Failure>;

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).with_context(|| format!("cannot read {}", path.display())).map_err(Failure::input)
}

fn load_graph(path: &Path) -> Result<(Vec<u8>, RotationGraph), Failure> {
    let bytes = read(path)?;
    let text = String::from_utf8(bytes.clone())
        .with_context(|| format!("{} is not UTF-8", path.display()))
        .map_err(Failure::input)?;
    let g = parse_rotation_graph(&text)
        .with_context(|| format!("cannot parse {}", path.display()))
        .map_err(Failure::input)?;
    Ok((bytes, g))
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display()))
            .map_err(Failure::input),
        None => {
            out!("{text}");
            Ok(())
        }
    }
}

fn edge_budget() -> Result<usize, Failure> {
    match std::env::var(EDGE_BUDGET_VAR) {
        Ok(value) => value
            .trim()
            .parse()
            .map_err(|_| Failure::input(anyhow!("{EDGE_BUDGET_VAR} must be a nonnegative integer, got `{value}`"))),
        Err(_) => Ok(DEFAULT_EDGE_BUDGET),
    }
}

pub fn analyze(path: &Path, json: bool) -> CmdResult {
    let (bytes, g) = load_graph(path)?;
    let summary = g.summary();
    let structure = classify(&g);
    if json {
        report::print("analyze", &[&bytes], json!({ "embedding": summary, "structure": structure }));
        return Ok(SUCCESS);
    }
    outln!(
        "vertices {}  edges {}  faces {}  characteristic {}  components {}",
        summary.vertices, summary.edges, summary.faces, summary.characteristic, summary.components
    );
    outln!("nonnegative characteristic: {}", summary.is_nonnegative());
    let flags = |m: &std::collections::BTreeMap<usize, bool>| {
        m.iter().map(|(k, v)| format!("{k}:{}", if *v { "yes" } else { "no" })).collect::<Vec<_>>().join(" ")
    };
    outln!("cycles        {}", flags(&structure.has_cycle));
    outln!("chord cycles  {}", flags(&structure.has_chord_cycle));
    outln!("adjacent 4-cycles: {}", structure.has_adjacent_4cycles);
    let class_g: Vec<String> =
        structure.class_g.iter().map(|c| serde_json::to_value(c).unwrap().as_str().unwrap().to_string()).collect();
    let class_h: Vec<String> = structure.class_h.iter().map(|(i, j)| format!("no {i}- and {j}-cycles")).collect();
    outln!("class G: {}", if class_g.is_empty() { "none".into() } else { class_g.join(", ") });
    outln!("class H: {}", if class_h.is_empty() { "none".into() } else { class_h.join(", ") });
    outln!("vertex  degree  faces by degree  triangle run");
    for s in &structure.vertices {
        let counts: Vec<String> = s.face_counts.iter().map(|(d, n)| format!("n{d}={n}")).collect();
        outln!("{:>6}  {:>6}  {:<15}  {}", s.vertex, s.degree, counts.join(" "), s.max_triangle_run);
    }
    Ok(SUCCESS)
}

pub struct DecomposeArgs {
    pub graph: PathBuf,
    pub d: Option<usize>,
    pub h: Option<usize>,
    pub method: Method,
    pub threshold: usize,
    pub trace: Option<PathBuf>,
    pub out: Option<PathBuf>,
    pub json: bool,
}

fn parameters(method: Method, d: Option<usize>, h: Option<usize>) -> Result<(usize, usize), Failure> {
    match method {
        Method::Oracle => match (d, h) {
            (Some(d), Some(h)) => Ok((d, h)),
            _ => Err(Failure::input(anyhow!("--method oracle needs both --d and --h"))),
        },
        Method::Reduce(theorem) => {
            let want = (theorem.d(), theorem.h());
            let got = (d.unwrap_or(want.0), h.unwrap_or(want.1));
            if got != want {
                return Err(Failure::input(anyhow!(
                    "--method reduce:{theorem} builds ({},{})-decompositions, not ({},{})",
                    want.0,
                    want.1,
                    got.0,
                    got.1
                )));
            }
            Ok(want)
        }
    }
}

#[derive(Serialize)]
struct DecomposeResult<'a> {
    method: String,
    d: usize,
    h: usize,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    theorem: Option<Theorem>,
    #[serde(skip_serializing_if = "Option::is_none")]
    in_class: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reductions: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    residual: Option<&'a [usize]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    decomposition: Option<String>,
}

pub fn decompose(args: DecomposeArgs) -> CmdResult {
    let (bytes, g) = load_graph(&args.graph)?;
    let (d, h) = parameters(args.method, args.d, args.h)?;
    let budget = edge_budget()?;
    let method = match args.method {
        Method::Oracle => "oracle".to_string(),
        Method::Reduce(t) => format!("reduce:{t}"),
    };
    let mut result = DecomposeResult {
        method,
        d,
        h,
        status: "decomposed",
        theorem: None,
        in_class: None,
        reductions: None,
        residual: None,
        decomposition: None,
    };

    let residual;
    let found: Option<OrientedDecomposition> = match args.method {
        Method::Oracle => oracle_decide(&g, d, h, budget)
            .map_err(|e| Failure::input(anyhow!("{e} (raise it with {EDGE_BUDGET_VAR})")))?,
        Method::Reduce(theorem) => {
            let options = ReductionOptions { threshold: args.threshold, edge_budget: budget };
            let red = decompose_by_reduction(&g, theorem, options).map_err(Failure::internal)?;
            if let Some(path) = &args.trace {
                let trace = json!({ "v": report::SCHEMA_VERSION, "theorem": theorem, "trace": red.trace });
                let text = serde_json::to_string_pretty(&trace).expect("traces serialize") + "\n";
                fs::write(path, text)
                    .with_context(|| format!("cannot write {}", path.display()))
                    .map_err(Failure::input)?;
            }
            result.theorem = Some(theorem);
            result.in_class = Some(red.in_class);
            result.reductions = Some(red.trace.len());
            if !red.in_class && !args.json {
                eprintln!("note: the input lies outside the class covered by {theorem}");
            }
            match red.outcome {
                ReductionOutcome::Decomposed { decomposition } => Some(decomposition),
                ReductionOutcome::NotDecomposable { residual: r } => {
                    residual = r;
                    result.residual = Some(&residual);
                    None
                }
                ReductionOutcome::Diagnostic { residual: r, edges } => {
                    residual = r;
                    result.status = "diagnostic";
                    result.residual = Some(&residual);
                    if args.json {
                        report::print("decompose", &[&bytes], &result);
                    } else {
                        eprintln!(
                            "diagnostic: no configuration applies to the {}-vertex residual with {edges} edges, \
                             above the oracle budget {budget}",
                            residual.len()
                        );
                        outln!("residual vertices: {residual:?}");
                    }
                    return Ok(DIAGNOSTIC);
                }
            }
        }
    };

    let Some(dec) = found else {
        result.status = "not_decomposable";
        if args.json {
            report::print("decompose", &[&bytes], &result);
        } else {
            outln!("no ({d},{h})-decomposition exists");
        }
        return Ok(VIOLATED);
    };
    check(&g, &dec).map_err(|e| Failure::internal(anyhow!("constructed decomposition fails verification: {e}")))?;
    let text = write_decomposition(&dec);
    if let Some(out) = &args.out {
        write_output(Some(out), &text)?;
    }
    if args.json {
        result.decomposition = Some(text);
        report::print("decompose", &[&bytes], &result);
    } else if args.out.is_none() {
        out!("{text}");
    } else {
        outln!("wrote ({d},{h})-decomposition: {} H edges, {} arcs", dec.h_edges.len(), dec.d_arcs.len());
    }
    Ok(SUCCESS)
}

pub fn verify(graph: &Path, decomposition: &Path, json: bool) -> CmdResult {
    let (graph_bytes, g) = load_graph(graph)?;
    let dec_bytes = read(decomposition)?;
    let text = String::from_utf8(dec_bytes.clone())
        .with_context(|| format!("{} is not UTF-8", decomposition.display()))
        .map_err(Failure::input)?;
    let dec = parse_decomposition(&text)
        .with_context(|| format!("cannot parse {}", decomposition.display()))
        .map_err(Failure::input)?;
    match check(&g, &dec) {
        Ok(()) => {
            if json {
                report::print("verify", &[&graph_bytes, &dec_bytes], json!({ "valid": true, "violation": null }));
            } else {
                outln!("ok: valid ({},{})-decomposition", dec.d, dec.h);
            }
            Ok(SUCCESS)
        }
        Err(VerifyError::Violation(v)) => {
            if json {
                report::print("verify", &[&graph_bytes, &dec_bytes], json!({ "valid": false, "violation": v }));
            } else {
                outln!("invalid: {v}");
            }
            Ok(VIOLATED)
        }
        Err(e @ VerifyError::NonexistentEdge { .. }) => Err(Failure::input(e)),
    }
}

pub fn discharge(path: &Path, ruleset: RuleSetId, json: bool) -> CmdResult {
    let (bytes, g) = load_graph(path)?;
    let report = audit(&g, ruleset);
    let code = if report.conservation { SUCCESS } else { VIOLATED };
    if json {
        report::print("discharge", &[&bytes], &report);
        return Ok(code);
    }
    outln!(
        "ruleset {}  characteristic {}  total {} -> {}  conservation {}",
        report.ruleset,
        report.characteristic,
        ratio_string(&report.total_initial),
        ratio_string(&report.total_final),
        if report.conservation { "holds" } else { "FAILS" }
    );
    outln!("positive elements: {}", report.positive);
    outln!("negative elements: {}", report.negatives.len());
    for neg in &report.negatives {
        let explained = neg
            .explained_by
            .as_ref()
            .map_or_else(|| "unexplained".to_string(), |m| format!("explained by {}", m.lemma));
        outln!("  {} final {} ({explained})", neg.element, ratio_string(&neg.final_charge));
    }
    match &report.reducible {
        Some(m) => outln!("reducible: {} at {:?}", m.lemma, m.deleted),
        None => outln!("reducible: no configuration found"),
    }
    Ok(code)
}

pub fn gen(kind: &str, params: &[usize], out: Option<&Path>) -> CmdResult {
    let kind = Kind::from_parts(kind, params).map_err(Failure::input)?;
    let g = generate(kind).map_err(Failure::input)?;
    write_output(out, &write_rotation_graph(&g))?;
    Ok(SUCCESS)
}
