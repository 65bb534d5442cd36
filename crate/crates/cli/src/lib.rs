//! Front end for `graded-hilbert`: parses group and grading specifications,
//! runs the engine and the requested checks, and renders reports.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use graded_hilbert::exact::reduce;
use graded_hilbert::fg::{classify_grading, generator_series, is_finitely_generated, FgVerdict};
use graded_hilbert::hilbert::{hilbert_components, verify_structure, HilbertError};
use graded_hilbert::oracle::{cross_check, cross_check_column, tensor_dimensions};
use graded_hilbert::{hilbert_identity, DimVector, Group, GroupError, HilbertResult, IntPoly, RatFun};
use indexmap::IndexMap;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{field}: {message}")]
    Invalid { field: String, message: String },
    #[error("{field}: invalid JSON at line {line}, column {column}: {message}")]
    Json { field: String, line: usize, column: usize, message: String },
    #[error("{field}: cannot read {path}: {message}")]
    Io { field: String, path: String, message: String },
}

fn invalid(field: &str, message: impl ToString) -> InputError {
    InputError::Invalid { field: field.to_string(), message: message.to_string() }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(#[from] InputError),
    #[error("engine error: {0}")]
    Engine(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Engine(_) => 2,
        }
    }
}

impl From<HilbertError> for CliError {
    fn from(e: HilbertError) -> Self {
        CliError::Engine(e.to_string())
    }
}

/// Group specification as accepted in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupSpec {
    Cyclic { n: usize },
    Dihedral { n: usize },
    Symmetric { n: usize },
    Product { factors: Vec<GroupSpec> },
    Table {
        #[serde(default)]
        labels: Option<Vec<String>>,
        table: Vec<Vec<usize>>,
    },
}

impl GroupSpec {
    pub fn build(&self) -> Result<Group, GroupError> {
        match self {
            GroupSpec::Cyclic { n } => Group::cyclic(*n),
            GroupSpec::Dihedral { n } => Group::dihedral(*n),
            GroupSpec::Symmetric { n } => Group::symmetric(*n),
            GroupSpec::Product { factors } => {
                let mut iter = factors.iter();
                let first = iter
                    .next()
                    .ok_or_else(|| GroupError::NotAGroup("product with no factors".into()))?;
                iter.try_fold(first.build()?, |acc, f| Group::direct_product(&acc, &f.build()?))
            }
            GroupSpec::Table { labels, table } => Group::from_cayley_table(table.clone(), labels.clone()),
        }
    }

    /// Short description: presets render as presets, tables by order.
    pub fn describe(&self) -> String {
        match self {
            GroupSpec::Cyclic { n } => format!("cyclic:{n}"),
            GroupSpec::Dihedral { n } => format!("dihedral:{n}"),
            GroupSpec::Symmetric { n } => format!("symmetric:{n}"),
            GroupSpec::Product { factors } => {
                let parts: Vec<String> = factors.iter().map(GroupSpec::describe).collect();
                format!("product:{}", parts.join("+"))
            }
            GroupSpec::Table { table, .. } => format!("table:{}", table.len()),
        }
    }
}

/// Parses `cyclic:N`, `dihedral:N`, `symmetric:N` or `product:A+B+...`.
pub fn parse_preset(s: &str) -> Option<Result<GroupSpec, InputError>> {
    let (kind, rest) = s.split_once(':')?;
    let number = |r: &str| {
        r.trim()
            .parse::<usize>()
            .map_err(|_| invalid("group", format!("expected a number after '{kind}:', got '{r}'")))
    };
    Some(match kind {
        "cyclic" => number(rest).map(|n| GroupSpec::Cyclic { n }),
        "dihedral" => number(rest).map(|n| GroupSpec::Dihedral { n }),
        "symmetric" => number(rest).map(|n| GroupSpec::Symmetric { n }),
        "product" => rest
            .split('+')
            .map(|f| match parse_preset(f.trim()) {
                Some(r) => r,
                None => Err(invalid("group", format!("unknown product factor '{f}'"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(|factors| GroupSpec::Product { factors }),
        _ => return None,
    })
}

fn json_error(field: &str, e: serde_json::Error) -> InputError {
    InputError::Json { field: field.into(), line: e.line(), column: e.column(), message: e.to_string() }
}

/// Inline JSON when the argument starts with `{`, otherwise a file path.
fn read_json_arg(field: &str, arg: &str) -> Result<String, InputError> {
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(Path::new(arg)).map_err(|e| InputError::Io {
        field: field.into(),
        path: arg.into(),
        message: e.to_string(),
    })
}

/// A preset, inline JSON, or a path to a JSON file.
pub fn parse_group_arg(arg: &str) -> Result<GroupSpec, InputError> {
    if let Some(preset) = parse_preset(arg.trim()) {
        return preset;
    }
    let text = read_json_arg("group", arg)?;
    serde_json::from_str(&text).map_err(|e| json_error("group", e))
}

/// Dimension map keyed by element label or index; absent elements get 0.
pub fn parse_dims_arg(arg: &str) -> Result<IndexMap<String, u64>, InputError> {
    let text = read_json_arg("dims", arg)?;
    serde_json::from_str(&text).map_err(|e| json_error("dims", e))
}

/// Resolves keys against labels first, then as indices.
pub fn resolve_dims(g: &Group, map: &IndexMap<String, u64>) -> Result<DimVector, InputError> {
    let mut dims = vec![0u64; g.order()];
    let mut seen = vec![None::<&str>; g.order()];
    for (key, &value) in map {
        let index = g
            .find_label(key)
            .or_else(|| key.parse::<usize>().ok().filter(|&i| i < g.order()))
            .ok_or_else(|| {
                invalid(&format!("dims[\"{key}\"]"), format!("no element with label or index '{key}'"))
            })?;
        if let Some(other) = seen[index] {
            return Err(invalid(
                &format!("dims[\"{key}\"]"),
                format!("element '{}' already given as \"{other}\"", g.label(index)),
            ));
        }
        seen[index] = Some(key);
        dims[index] = value;
    }
    DimVector::new(dims).map_err(|e| invalid("dims", e))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checks {
    pub oracle: bool,
    pub structure: bool,
    pub fg: bool,
    pub components: bool,
}

impl Checks {
    pub fn all() -> Checks {
        Checks { oracle: true, structure: true, fg: true, components: true }
    }

    pub fn none() -> Checks {
        Checks { oracle: false, structure: false, fg: false, components: false }
    }

    /// Comma-separated subset of `oracle,structure,fg,components`, or `all` / `none`.
    pub fn parse(s: &str) -> Result<Checks, InputError> {
        let mut checks = Checks::none();
        for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
            match item {
                "oracle" => checks.oracle = true,
                "structure" => checks.structure = true,
                "fg" => checks.fg = true,
                "components" => checks.components = true,
                "all" => checks = Checks::all(),
                "none" => {}
                other => return Err(invalid("check", format!("unknown check '{other}'"))),
            }
        }
        Ok(checks)
    }
}

#[derive(Debug, Clone)]
pub struct JobSpec {
    pub group_spec: GroupSpec,
    pub group: Group,
    pub dims: DimVector,
    pub expand_to: usize,
    pub checks: Checks,
}

impl JobSpec {
    pub fn new(
        group_spec: GroupSpec,
        dims: &IndexMap<String, u64>,
        expand_to: usize,
        checks: Checks,
    ) -> Result<JobSpec, InputError> {
        let group = group_spec.build().map_err(|e| invalid("group", e))?;
        let dims = resolve_dims(&group, dims)?;
        Ok(JobSpec { group_spec, group, dims, expand_to, checks })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl SeriesJson {
    fn from_ratfun(f: &RatFun) -> SeriesJson {
        SeriesJson { num: f.num().to_decimal_strings(), den: f.den().to_decimal_strings() }
    }

    pub fn to_ratfun(&self) -> Result<RatFun, String> {
        let num = IntPoly::from_decimal_strings(&self.num)?;
        let den = IntPoly::from_decimal_strings(&self.den)?;
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(reduce(&num, &den).with_unit_constant_denominator())
    }
}

/// `P = p / ((1 - d t) q)` with `p(0) = q(0) = 1`, before cancellation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuredJson {
    pub p: Vec<String>,
    pub d: String,
    pub q: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorsJson {
    pub closed_form: SeriesJson,
    pub prefix: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub finitely_generated: bool,
    pub reason: String,
    pub outside_paper_theorems: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub group: String,
    pub order: usize,
    pub dims: IndexMap<String, String>,
    pub series: SeriesJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structured: Option<StructuredJson>,
    pub expansion: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<IndexMap<String, SeriesJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<GeneratorsJson>,
    pub verdict: VerdictJson,
    pub checks: IndexMap<String, CheckJson>,
    pub timing_ms: f64,
}

impl Report {
    pub fn all_checks_passed(&self) -> bool {
        self.checks.values().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(BigInt::to_string).collect()
}

fn check(passed: bool, detail: impl Into<String>) -> CheckJson {
    CheckJson { passed, detail: detail.into() }
}

pub fn run(spec: &JobSpec) -> Result<Report, CliError> {
    let start = Instant::now();
    let g = &spec.group;
    let res = hilbert_identity(g, &spec.dims)?;
    let expansion = res
        .series
        .expand(spec.expand_to)
        .map_err(|e| CliError::Engine(e.to_string()))?;
    let verdict = is_finitely_generated(g, &res).map_err(|e| CliError::Engine(e.to_string()))?;
    let generators = generator_series(&res, spec.expand_to);

    let mut checks = IndexMap::new();
    let components = if spec.checks.components {
        let all = hilbert_components(g, &spec.dims)?;
        checks.insert("components".to_string(), partition_check(&res, &all));
        Some(all)
    } else {
        None
    };
    if spec.checks.oracle {
        checks.insert("oracle".to_string(), oracle_check(spec, &res, components.as_deref())?);
    }
    if spec.checks.structure {
        let c = if res.d == 0 {
            check(true, "not applicable: d = 0")
        } else {
            let r = verify_structure(&res)?;
            check(r.all_passed(), format!("{r:?}"))
        };
        checks.insert("structure".to_string(), c);
    }
    if spec.checks.fg {
        checks.insert("fg".to_string(), fg_check(&res, &verdict, &generators));
    }
    // Fixed order, independent of which checks ran first.
    let order = ["oracle", "structure", "fg", "components"];
    checks.sort_by_key(|k, _| order.iter().position(|o| o == k));

    let structured = (res.d > 0).then(|| StructuredJson {
        p: res.p_normalized().to_decimal_strings(),
        d: res.d.to_string(),
        q: res.q.to_decimal_strings(),
    });
    let dims = (0..g.order()).map(|x| (g.label(x).to_string(), spec.dims.get(x).to_string())).collect();
    Ok(Report {
        group: spec.group_spec.describe(),
        order: g.order(),
        dims,
        series: SeriesJson::from_ratfun(&res.series),
        structured,
        expansion: strings(&expansion.coeffs),
        components: components.map(|all| {
            all.iter()
                .enumerate()
                .map(|(x, f)| (g.label(x).to_string(), SeriesJson::from_ratfun(f)))
                .collect()
        }),
        generators: generators.as_ref().ok().map(|gs| GeneratorsJson {
            closed_form: SeriesJson::from_ratfun(&gs.closed_form),
            prefix: strings(&gs.coeffs),
        }),
        verdict: VerdictJson {
            finitely_generated: verdict.finitely_generated,
            reason: verdict.reason.as_str().to_string(),
            outside_paper_theorems: verdict.outside_classical_theorems(),
        },
        checks,
        timing_ms: (start.elapsed().as_secs_f64() * 1e6).round() / 1e3,
    })
}

fn oracle_check(
    spec: &JobSpec,
    res: &HilbertResult,
    components: Option<&[RatFun]>,
) -> Result<CheckJson, CliError> {
    let table = tensor_dimensions(&spec.group, &spec.dims, spec.expand_to)
        .map_err(|e| CliError::Engine(e.to_string()))?;
    if let Some(n) = cross_check(res, &table).first_mismatch {
        return Ok(check(false, format!("identity series differs from recursion at t^{n}")));
    }
    for (x, f) in components.unwrap_or_default().iter().enumerate() {
        if let Some(n) = cross_check_column(f, &table, x).first_mismatch {
            let label = spec.group.label(x);
            return Ok(check(false, format!("component {label} differs from recursion at t^{n}")));
        }
    }
    let what = if components.is_some() { "identity and all components" } else { "identity series" };
    Ok(check(true, format!("{what} agree through t^{}", spec.expand_to)))
}

fn partition_check(res: &HilbertResult, all: &[RatFun]) -> CheckJson {
    let sum = all.iter().fold(RatFun::zero(), |acc, f| acc.add(f));
    let expected = reduce(&IntPoly::one(), &IntPoly::linear(1, -BigInt::from(res.d)));
    if sum == expected {
        check(true, format!("components sum to {}", expected.with_unit_constant_denominator()))
    } else {
        check(false, format!("components sum to {sum}"))
    }
}

fn fg_check(
    res: &HilbertResult,
    verdict: &FgVerdict,
    generators: &Result<graded_hilbert::fg::GeneratorSeries, graded_hilbert::fg::FgError>,
) -> CheckJson {
    let gens = match generators {
        Ok(g) => g,
        Err(e) => return check(false, format!("generator series: {e}")),
    };
    let class = classify_grading(&res.dims);
    if class.trivial && !verdict.finitely_generated {
        return check(false, "trivial grading but not finitely generated");
    }
    if !class.trivial && res.dims.get(0) > 0 && verdict.finitely_generated {
        return check(false, "nontrivial grading with V_e != 0 but finitely generated");
    }
    // 1/(1 - g) must reproduce P.
    let n = gens.coeffs.len() - 1;
    let mut h = vec![BigInt::from(1)];
    for k in 1..=n {
        h.push((1..=k).map(|j| &gens.coeffs[j] * &h[k - j]).sum());
    }
    match res.series.expand(n) {
        Ok(p) if p.coeffs == h => check(true, "verdict consistent; generator counts nonnegative"),
        _ => check(false, "1/(1 - g) does not re-expand to P"),
    }
}

/// Human-readable rendering.
pub fn render_human(report: &Report) -> String {
    let mut out = String::new();
    let series = report.series.to_ratfun().expect("report series parses");
    let nonzero: Vec<String> = report
        .dims
        .iter()
        .filter(|(_, v)| v.as_str() != "0")
        .map(|(k, v)| format!("{k}:{v}"))
        .collect();
    let _ = writeln!(out, "group      {} (order {})", report.group, report.order);
    let _ = writeln!(out, "dims       {{{}}}", nonzero.join(", "));
    let _ = writeln!(out, "P(t)       {series}");
    if let Some(s) = &report.structured {
        let p = IntPoly::from_decimal_strings(&s.p).expect("p parses");
        let q = IntPoly::from_decimal_strings(&s.q).expect("q parses");
        let _ = writeln!(out, "           = ({p}) / ((1 - {}*t) * ({q}))", s.d);
    }
    let _ = writeln!(out, "expansion  {}", report.expansion.join(", "));
    let v = &report.verdict;
    let _ = writeln!(
        out,
        "verdict    {} ({}){}",
        if v.finitely_generated { "finitely generated" } else { "not finitely generated" },
        v.reason,
        if v.outside_paper_theorems { "; outside the classical theorems (V_e = 0, support > 1)" } else { "" },
    );
    if let Some(gs) = &report.generators {
        let closed = gs.closed_form.to_ratfun().expect("generator series parses");
        let _ = writeln!(out, "generators {closed}");
        let _ = writeln!(out, "           counts {}", gs.prefix.join(", "));
    }
    if let Some(components) = &report.components {
        for (label, c) in components {
            let f = c.to_ratfun().expect("component parses");
            let _ = writeln!(out, "F[{label}]{:pad$} {f}", "", pad = 9usize.saturating_sub(label.len() + 3));
        }
    }
    for (name, c) in &report.checks {
        let _ = writeln!(out, "check      {name}: {} ({})", if c.passed { "PASS" } else { "FAIL" }, c.detail);
    }
    let _ = writeln!(out, "time       {} ms", report.timing_ms);
    out
}
