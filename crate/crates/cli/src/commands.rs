use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use wfano_core::lattice::quartic_model_classes;
use wfano_core::numerics::{linkage_residual, linkage_witness};
use wfano_core::reference::{LITERATURE_TWISTED_CUBIC_COUNT, TABLE4};
use wfano_core::surfaces::{
    classify_cubic, classify_quartic_model, enumerate_cubic_cases, printed_columns, quartic_search,
};
use wfano_core::{
    classify, incidence_check, numeric_verdict, secant_possibility, ArithmeticCurve, Category,
    ClassificationRecord, CurveType, DivisorClass, LinkageType, PointConfig, PointVerdict,
};

use crate::args::{
    CategoryFilter, Command, CubicCommand, CurveArgs, Format, PointsCommand, QuarticCommand,
    TableName, TablesCommand,
};
use crate::report::{markdown, Report, Row, TableResult};
use crate::tables;

/// Text to print on stdout and the process exit status.
pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

/// An invalid input: printed on stderr, exit status 1.
#[derive(Debug)]
pub struct InputError(pub String);

impl<E: std::error::Error> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Result<T> = std::result::Result<T, InputError>;

pub struct Context {
    pub command: String,
    pub color: bool,
}

pub fn run(cmd: Command, ctx: &Context) -> Result<Output> {
    match cmd {
        Command::Classify { curve, format } => classify_cmd(&curve, format, ctx),
        Command::Cubic(CubicCommand::Enumerate { category }) => cubic_enumerate(category, ctx),
        Command::Cubic(CubicCommand::Classify { class }) => cubic_classify(&class, ctx),
        Command::Quartic(QuarticCommand::VerifyTable4) => verify_table4(ctx),
        Command::Quartic(QuarticCommand::Search { curve }) => quartic_search_cmd(&curve, ctx),
        Command::Secants { curve } => {
            let report = secant_possibility(curve_type(&curve)?)?;
            Ok(json(ctx, report, vec![]))
        }
        Command::Linkage { curve, n1, n2 } => linkage_cmd(&curve, n1, n2, ctx),
        Command::Tables(TablesCommand::Emit { table, format }) => emit(table, format, ctx),
        Command::Tables(TablesCommand::Verify { file }) => verify(&file, ctx),
        Command::Points(PointsCommand::Classify { file }) => points_cmd(&file, ctx),
    }
}

fn json<T: Serialize>(ctx: &Context, result: T, notes: Vec<String>) -> Output {
    Output::ok(Report::new(&ctx.command, result, notes).to_json())
}

fn curve_type(c: &CurveArgs) -> Result<CurveType> {
    Ok(CurveType::new(c.genus, c.degree)?)
}

fn kebab<T: Serialize>(v: &T) -> String {
    match serde_json::to_value(v).expect("enum serializes") {
        serde_json::Value::String(s) => s,
        other => other.to_string(),
    }
}

fn classify_cmd(c: &CurveArgs, format: Format, ctx: &Context) -> Result<Output> {
    let record = classify(curve_type(c)?);
    match format {
        Format::Json => Ok(json(ctx, &record, classify_notes(&record))),
        Format::Text => Ok(Output::ok(text_record(&record, ctx.color))),
        Format::Markdown => Err(InputError(
            "classify supports --format json or text".to_string(),
        )),
    }
}

fn classify_notes(r: &ClassificationRecord) -> Vec<String> {
    let mut notes = Vec::new();
    if r.aset.is_none() && r.k3 > 0 {
        notes.push("pair is not among the 43 tabulated curve types".to_string());
    }
    if r.witness.is_some() {
        notes.push("witness: linkage through a cubic and a quartic".to_string());
    }
    notes
}

fn text_record(r: &ClassificationRecord, color: bool) -> String {
    let label = |s: &str| {
        if color {
            format!("\x1b[1m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    };
    let mut s = String::new();
    let mut line = |k: &str, v: String| {
        let _ = writeln!(s, "{:<22}{v}", label(&format!("{k}:")));
    };
    line("curve", r.curve_type.to_string());
    line(
        "set",
        r.aset.map_or("-".to_string(), |a| a.as_str().to_string()),
    );
    line("verdict", r.verdict.as_str().to_string());
    line("(-K)^3", r.k3.to_string());
    line("dim |-K| >=", r.dim_anti.to_string());
    let conds = |c: &[wfano_core::Condition]| {
        if c.is_empty() {
            "none".to_string()
        } else {
            c.iter().map(|c| c.as_str()).collect::<Vec<_>>().join(", ")
        }
    };
    line("weak fano conditions", conds(&r.conditions));
    if let Some(f) = &r.fano_conditions {
        line("fano conditions", conds(f));
    }
    if let Some(t) = &r.anticanonical_type {
        line("anticanonical model", kebab(t));
    }
    line("genericity", kebab(&r.genericity));
    if let Some(l) = &r.link {
        let flop = if l.has_flop { " (after a flop)" } else { "" };
        line("link", format!("{}{flop}", l.target));
    }
    if let Some(w) = &r.witness {
        line(
            "witness",
            format!(
                "linkage {} with residual {}, {}-secant",
                w.linkage, w.residual, w.secancy
            ),
        );
    }
    s
}

#[derive(Serialize)]
struct EnumeratedCase {
    class: String,
    #[serde(flatten)]
    row: Row,
}

fn cubic_enumerate(filter: CategoryFilter, ctx: &Context) -> Result<Output> {
    let keep = |c: Category| match filter {
        CategoryFilter::Fano => c == Category::Fano,
        CategoryFilter::Small => c == Category::WeakFanoSmall,
        CategoryFilter::Divisorial => c == Category::WeakFanoDivisorial,
        CategoryFilter::All => true,
    };
    let cases: Vec<EnumeratedCase> = enumerate_cubic_cases()
        .into_iter()
        .filter(|c| keep(c.category))
        .map(|c| {
            let class = c.class.clone().expect("lattice classification has a class");
            let mut row = Row::new(c.curve_type.genus(), c.curve_type.degree());
            row.k = Some(class.degree());
            row.mults = Some(class.mults().to_vec());
            row.four_secants = match c.category {
                Category::Fano => None,
                _ => c.four_secant_count,
            };
            row.dim_anti = Some(c.dim_anti_lower);
            row.category = Some(c.category.as_str().to_string());
            EnumeratedCase {
                class: class.to_string(),
                row,
            }
        })
        .collect();
    Ok(json(
        ctx,
        cases,
        vec!["classes are Cremona-normalized; dim_anti is the lower bound 33 - 4d + g".into()],
    ))
}

fn cubic_classify(text: &str, ctx: &Context) -> Result<Output> {
    let class: DivisorClass = text.parse()?;
    Ok(json(ctx, classify_cubic(&class)?, vec![]))
}

#[derive(Serialize)]
struct Table4Check {
    g: i64,
    d: i64,
    class: String,
    sum_ok: bool,
    degree_ok: bool,
    genus_ok: bool,
    max_mult_ok: bool,
    columns_ok: bool,
    found_by_search: bool,
}

impl Table4Check {
    fn passes(&self) -> bool {
        self.sum_ok
            && self.degree_ok
            && self.genus_ok
            && self.max_mult_ok
            && self.columns_ok
            && self.found_by_search
    }
}

#[derive(Serialize)]
struct Table4Verification {
    rows: Vec<Table4Check>,
    lines: usize,
    conics: usize,
    twisted_cubics: usize,
    mismatches: usize,
}

fn verify_table4(ctx: &Context) -> Result<Output> {
    let rows: Vec<Table4Check> = TABLE4
        .iter()
        .map(|r| {
            let class = DivisorClass::new(r.k, r.mults.to_vec());
            let report = classify_quartic_model(&class).ok();
            let c = r.curve_type;
            let sum: i64 = r.mults.iter().sum();
            Table4Check {
                g: c.genus(),
                d: c.degree(),
                class: class.to_string(),
                sum_ok: sum == 3 * r.k - 1,
                degree_ok: c.degree() == r.k + 1,
                genus_ok: report
                    .as_ref()
                    .is_some_and(|rep| rep.classification.curve_type == c),
                max_mult_ok: r.mults.iter().all(|&m| m <= 4),
                columns_ok: printed_columns(&class) == (r.conic_secancy, r.cubic_secancy),
                found_by_search: quartic_search(c).contains(&class),
            }
        })
        .collect();
    let classes = quartic_model_classes();
    let mismatches = rows.iter().filter(|r| !r.passes()).count();
    let result = Table4Verification {
        rows,
        lines: classes.lines.len(),
        conics: classes.conics.len(),
        twisted_cubics: classes.twisted_cubics.len(),
        mismatches,
    };
    let notes = vec![format!(
        "the lattice has {} twisted-cubic classes; the literature count {} is 7 times larger",
        result.twisted_cubics, LITERATURE_TWISTED_CUBIC_COUNT
    )];
    let mut out = json(ctx, result, notes);
    if mismatches > 0 {
        out.code = 2;
    }
    Ok(out)
}

#[derive(Serialize)]
struct SearchResult {
    g: i64,
    d: i64,
    count: usize,
    classes: Vec<String>,
}

fn quartic_search_cmd(c: &CurveArgs, ctx: &Context) -> Result<Output> {
    let ct = curve_type(c)?;
    let classes: Vec<String> = quartic_search(ct).iter().map(|c| c.to_string()).collect();
    Ok(json(
        ctx,
        SearchResult {
            g: ct.genus(),
            d: ct.degree(),
            count: classes.len(),
            classes,
        },
        vec!["multiplicities sorted non-increasingly".into()],
    ))
}

fn linkage_cmd(c: &CurveArgs, n1: i64, n2: i64, ctx: &Context) -> Result<Output> {
    let ct = curve_type(c)?;
    let t = LinkageType::new(n1, n2)?;
    match linkage_witness(ct, t) {
        Ok(w) => Ok(json(ctx, w, vec![])),
        Err(_) => {
            // still report the residual when the union secancy is undefined
            let residual: ArithmeticCurve = linkage_residual(ct.into(), t)?;
            #[derive(Serialize)]
            struct Residual {
                linkage: LinkageType,
                residual: ArithmeticCurve,
            }
            Ok(json(
                ctx,
                Residual {
                    linkage: t,
                    residual,
                },
                vec!["residual is not a smooth curve type; no secancy computed".into()],
            ))
        }
    }
}

fn emit(table: TableName, format: Format, ctx: &Context) -> Result<Output> {
    let rows = tables::rows(table);
    match format {
        Format::Json => Ok(json(
            ctx,
            TableResult {
                table: table.as_str().to_string(),
                rows,
            },
            vec![],
        )),
        Format::Markdown => Ok(Output::ok(markdown(tables::title(table), &rows))),
        Format::Text => Err(InputError(
            "tables emit supports --format json or markdown".to_string(),
        )),
    }
}

#[derive(Deserialize)]
struct EmittedReport {
    result: TableResult,
}

#[derive(Serialize)]
struct VerifyResult {
    table: String,
    rows: usize,
    mismatches: Vec<String>,
}

fn verify(path: &Path, ctx: &Context) -> Result<Output> {
    let text = fs::read_to_string(path)
        .map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
    let emitted: EmittedReport = serde_json::from_str(&text)
        .map_err(|e| InputError(format!("{} is not an emitted table: {e}", path.display())))?;
    let table = TableName::parse(&emitted.result.table)
        .ok_or_else(|| InputError(format!("unknown table {:?}", emitted.result.table)))?;
    let mismatches = tables::diff(table, &emitted.result.rows);
    let code = if mismatches.is_empty() { 0 } else { 2 };
    let mut out = json(
        ctx,
        VerifyResult {
            table: table.as_str().to_string(),
            rows: emitted.result.rows.len(),
            mismatches,
        },
        vec![],
    );
    out.code = code;
    Ok(out)
}

#[derive(Serialize)]
struct HigherDimensional {
    dimension: usize,
    points: usize,
    numeric_verdict: PointVerdict,
}

fn points_cmd(path: &Path, ctx: &Context) -> Result<Output> {
    let text = fs::read_to_string(path)
        .map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
    let cfg = PointConfig::from_json(&text)?;
    if cfg.dimension() == 3 {
        return Ok(json(ctx, incidence_check(&cfg)?, vec![]));
    }
    let result = HigherDimensional {
        dimension: cfg.dimension(),
        points: cfg.len(),
        numeric_verdict: numeric_verdict(cfg.dimension() as i64, cfg.len() as i64),
    };
    Ok(json(
        ctx,
        result,
        vec!["incidence checks are implemented in P³ only".into()],
    ))
}
