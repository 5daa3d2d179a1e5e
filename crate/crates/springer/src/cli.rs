//! Command-line front end: single-label maps, full correspondence tables,
//! 2-quotients, straightening walkthroughs, verification sweeps, and
//! basic-set datum checks. Exit codes: 0 success, 1 property failure,
//! 2 usage error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::basic_set::{find_betas, DecompositionMatrix, OrderRelation};
use crate::bipartition::{
    bipartitions_of, dlabels_of, Bipartition, DLabel, Sign, UnorderedBipartition,
};
use crate::correspondence::{
    lusztig_symbol_b, lusztig_symbol_c, lusztig_symbol_dlabel, modular_springer_b,
    modular_springer_c, modular_springer_d, modular_springer_gl, orbit_partition_of_symbol,
    springer_pair_bd, springer_pair_c, straighten_symbol, SpringerPair,
};
use crate::error::Error;
use crate::orbit::{two_quotient_of_partition, LieType};
use crate::partition::{partitions_of, Partition};
use crate::symbol::{symbol_from_rows, Symbol};
use crate::verify::{run_property, Property, VerificationReport};

const DEFAULT_MAX_N: u64 = 12;

fn enumeration_guard() -> u64 {
    std::env::var("SPRINGER_MAX_N")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

#[derive(Parser)]
#[command(
    name = "springer",
    version,
    about = "Springer correspondence tables and checks for classical Weyl groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "UPPER")]
enum TypeFlag {
    A,
    B,
    C,
    D,
}

impl TypeFlag {
    fn lie_type(self) -> Option<LieType> {
        match self {
            TypeFlag::A => None,
            TypeFlag::B => Some(LieType::B),
            TypeFlag::C => Some(LieType::C),
            TypeFlag::D => Some(LieType::D),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Map one character label through the ordinary (and optionally
    /// modular) correspondence
    Map {
        #[arg(long = "type", value_enum, ignore_case = true)]
        ty: TypeFlag,
        /// Label for types B/C/D, e.g. "1.4.4.5.6.7|1.3"
        #[arg(long)]
        bipartition: Option<String>,
        /// Partition label for type A, e.g. "2.3"
        #[arg(long)]
        mu: Option<String>,
        /// Sign for degenerate type-D labels
        #[arg(long)]
        sign: Option<Sign>,
        /// Optional consistency check on the label size
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        ell: Option<u32>,
        /// Also print the modular image (needs --ell and an l-regular label)
        #[arg(long)]
        modular: bool,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Print the full correspondence table for one type and rank
    Table {
        #[arg(long = "type", value_enum, ignore_case = true)]
        ty: TypeFlag,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        ell: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// 2-quotient of a nilpotent orbit partition
    Quotient {
        #[arg(long = "type", value_enum, ignore_case = true)]
        ty: TypeFlag,
        /// Orbit partition, e.g. "2.3.3.4.6.6.7.7.9.9"
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Straighten a symbol to its distinguished reordering
    Straighten {
        #[arg(long = "type", value_enum, ignore_case = true)]
        ty: TypeFlag,
        /// First row, dot-separated (may be empty)
        #[arg(long = "s-row", default_value = "")]
        s_row: String,
        /// Second row, dot-separated (may be empty)
        #[arg(long = "t-row", default_value = "")]
        t_row: String,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Run a registered verification sweep
    Verify {
        /// Property name, or "all"
        #[arg(long)]
        prop: String,
        #[arg(long = "type", value_enum, ignore_case = true)]
        ty: Option<TypeFlag>,
        #[arg(long = "max-n", default_value_t = 6)]
        max_n: u64,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Check a decomposition matrix and order for a basic set datum
    BasicSet {
        /// JSON file {"ordinary":[...],"modular":[...],"entries":[[...]]}
        #[arg(long)]
        matrix: PathBuf,
        /// JSON file {"pairs":[["E1","E2"],...]}
        #[arg(long)]
        order: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
}

/// Parses and executes; writes results to `out` and diagnostics to stderr.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Error> {
    match command {
        Command::Map {
            ty,
            bipartition,
            mu,
            sign,
            n,
            ell,
            modular,
            format,
        } => cmd_map(ty, bipartition, mu, sign, n, ell, modular, format, out),
        Command::Table { ty, n, ell, format } => cmd_table(ty, n, ell, format, out),
        Command::Quotient { ty, lambda, format } => cmd_quotient(ty, &lambda, format, out),
        Command::Straighten {
            ty,
            s_row,
            t_row,
            format,
        } => cmd_straighten(ty, &s_row, &t_row, format, out),
        Command::Verify {
            prop,
            ty,
            max_n,
            format,
        } => cmd_verify(&prop, ty, max_n, format, out),
        Command::BasicSet {
            matrix,
            order,
            format,
        } => cmd_basic_set(&matrix, &order, format, out),
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Error> {
    writeln!(out, "{text}").map_err(|e| Error::Parse(format!("write failed: {e}")))
}

// ---------------------------------------------------------------------------
// map
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct PairView {
    symbol: Symbol,
    d: i64,
    orbit: Partition,
    sign: Option<Sign>,
    local_system_trivial: bool,
}

impl PairView {
    fn of(pair: &SpringerPair) -> Self {
        PairView {
            symbol: pair.symbol.clone(),
            d: pair.symbol.d_value(),
            orbit: pair.orbit.partition().clone(),
            sign: pair.orbit.sign(),
            local_system_trivial: pair.local_system_trivial,
        }
    }

    fn orbit_text(&self) -> String {
        match self.sign {
            Some(sign) => format!("{}:{sign}", self.orbit.to_text()),
            None => self.orbit.to_text(),
        }
    }
}

#[derive(Serialize)]
struct MapRecord {
    #[serde(rename = "type")]
    ty: String,
    n: u64,
    label: String,
    phi: PairView,
    psi: PairView,
    modular: Option<PairView>,
}

#[derive(Serialize)]
struct GlMapRecord {
    #[serde(rename = "type")]
    ty: String,
    n: u64,
    mu: Partition,
    orbit: Partition,
    modular_orbit: Option<Partition>,
}

enum ClassicalLabel {
    Ordered(Bipartition),
    D(DLabel),
}

impl ClassicalLabel {
    fn size(&self) -> u64 {
        match self {
            ClassicalLabel::Ordered(b) => b.size(),
            ClassicalLabel::D(l) => l.size(),
        }
    }

    fn text(&self) -> String {
        match self {
            ClassicalLabel::Ordered(b) => b.to_text(),
            ClassicalLabel::D(l) => l.to_text(),
        }
    }
}

fn parse_classical_label(
    lie_type: LieType,
    bipartition: Option<&str>,
    sign: Option<Sign>,
) -> Result<ClassicalLabel, Error> {
    let text = bipartition.ok_or_else(|| {
        Error::Parse("types B, C, D need --bipartition".into())
    })?;
    let parsed = Bipartition::from_text(text)?;
    match lie_type {
        LieType::B | LieType::C => {
            if sign.is_some() {
                return Err(Error::Parse("--sign only applies to type D".into()));
            }
            Ok(ClassicalLabel::Ordered(parsed))
        }
        LieType::D => {
            let class = UnorderedBipartition::from_bipartition(&parsed);
            let label = if class.is_degenerate_class() {
                let sign = sign.ok_or_else(|| {
                    Error::Parse(format!(
                        "class {class} is degenerate; pass --sign + or --sign -"
                    ))
                })?;
                DLabel::degenerate(class.components().0.clone(), sign)
            } else {
                if sign.is_some() {
                    return Err(Error::Parse(format!(
                        "class {class} is not degenerate; --sign does not apply"
                    )));
                }
                DLabel::non_degenerate(class)?
            };
            Ok(ClassicalLabel::D(label))
        }
    }
}

fn phi_pair(lie_type: LieType, label: &ClassicalLabel) -> Result<SpringerPair, Error> {
    match (lie_type, label) {
        (LieType::C, ClassicalLabel::Ordered(b)) => springer_pair_c(&lusztig_symbol_c(b)),
        (LieType::B, ClassicalLabel::Ordered(b)) => springer_pair_bd(&lusztig_symbol_b(b), None),
        (LieType::D, ClassicalLabel::D(l)) => {
            springer_pair_bd(&lusztig_symbol_dlabel(l), l.sign())
        }
        _ => unreachable!("label kind matches the type by construction"),
    }
}

fn psi_pair(lie_type: LieType, label: &ClassicalLabel) -> Result<SpringerPair, Error> {
    let twisted = match label {
        ClassicalLabel::Ordered(b) => ClassicalLabel::Ordered(b.star()),
        ClassicalLabel::D(l) => ClassicalLabel::D(l.star()),
    };
    phi_pair(lie_type, &twisted)
}

fn modular_pair(
    lie_type: LieType,
    label: &ClassicalLabel,
    ell: u32,
) -> Result<SpringerPair, Error> {
    match (lie_type, label) {
        (LieType::C, ClassicalLabel::Ordered(b)) => modular_springer_c(b, ell),
        (LieType::B, ClassicalLabel::Ordered(b)) => modular_springer_b(b, ell),
        (LieType::D, ClassicalLabel::D(l)) => modular_springer_d(l, ell),
        _ => unreachable!(),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_map(
    ty: TypeFlag,
    bipartition: Option<String>,
    mu: Option<String>,
    sign: Option<Sign>,
    n: Option<u64>,
    ell: Option<u32>,
    modular: bool,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    if modular && ell.is_none() {
        return Err(Error::Parse("--modular needs --ell".into()));
    }
    if ty == TypeFlag::A {
        let mu = Partition::from_text(
            mu.as_deref()
                .ok_or_else(|| Error::Parse("type A needs --mu".into()))?,
        )?;
        if let Some(n) = n {
            if mu.sum() != n {
                return Err(Error::Parse(format!(
                    "label has size {}, not the declared {n}",
                    mu.sum()
                )));
            }
        }
        let modular_orbit = if modular {
            Some(modular_springer_gl(&mu, ell.unwrap())?)
        } else {
            None
        };
        let record = GlMapRecord {
            ty: "A".into(),
            n: mu.sum(),
            orbit: mu.conjugate(),
            mu,
            modular_orbit,
        };
        return match format {
            Format::Json => {
                write_out(out, &serde_json::to_string_pretty(&record).unwrap())?;
                Ok(0)
            }
            Format::Tsv => {
                write_out(out, "type\tn\tlabel\torbit\tmodular_orbit")?;
                write_out(
                    out,
                    &format!(
                        "A\t{}\t{}\t{}\t{}",
                        record.n,
                        record.mu.to_text(),
                        record.orbit.to_text(),
                        record
                            .modular_orbit
                            .as_ref()
                            .map(|p| p.to_text())
                            .unwrap_or_else(|| "-".into())
                    ),
                )?;
                Ok(0)
            }
            Format::Pretty => {
                write_out(out, &format!("label      {}", record.mu))?;
                write_out(out, &format!("orbit      {}", record.orbit))?;
                if let Some(m) = &record.modular_orbit {
                    write_out(out, &format!("modular    {m}"))?;
                }
                Ok(0)
            }
        };
    }

    let lie_type = ty.lie_type().unwrap();
    if mu.is_some() {
        return Err(Error::Parse("--mu only applies to type A".into()));
    }
    let label = parse_classical_label(lie_type, bipartition.as_deref(), sign)?;
    if let Some(n) = n {
        if label.size() != n {
            return Err(Error::Parse(format!(
                "label has size {}, not the declared {n}",
                label.size()
            )));
        }
    }
    let phi = PairView::of(&phi_pair(lie_type, &label)?);
    let psi = PairView::of(&psi_pair(lie_type, &label)?);
    let modular_view = if modular {
        Some(PairView::of(&modular_pair(lie_type, &label, ell.unwrap())?))
    } else {
        None
    };
    let record = MapRecord {
        ty: lie_type.as_str().into(),
        n: label.size(),
        label: label.text(),
        phi,
        psi,
        modular: modular_view,
    };
    match format {
        Format::Json => write_out(out, &serde_json::to_string_pretty(&record).unwrap())?,
        Format::Tsv => {
            write_out(
                out,
                "type\tn\tlabel\tphi_symbol\tphi_d\tphi_orbit\tphi_local_system\tpsi_symbol\tpsi_d\tpsi_orbit\tpsi_local_system\tmodular_orbit",
            )?;
            write_out(
                out,
                &format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    record.ty,
                    record.n,
                    record.label,
                    record.phi.symbol,
                    record.phi.d,
                    record.phi.orbit_text(),
                    record.phi.local_system_trivial,
                    record.psi.symbol,
                    record.psi.d,
                    record.psi.orbit_text(),
                    record.psi.local_system_trivial,
                    record
                        .modular
                        .as_ref()
                        .map(|m| m.orbit_text())
                        .unwrap_or_else(|| "-".into()),
                ),
            )?;
        }
        Format::Pretty => {
            write_out(out, &format!("label          {}", record.label))?;
            write_out(out, &format!("type {}, n = {}", record.ty, record.n))?;
            write_out(out, "phi symbol")?;
            write_out(out, &record.phi.symbol.two_row_display())?;
            write_out(
                out,
                &format!(
                    "phi: d = {}, orbit = {}, local system {}",
                    record.phi.d,
                    record.phi.orbit_text(),
                    if record.phi.local_system_trivial {
                        "trivial"
                    } else {
                        "nontrivial"
                    }
                ),
            )?;
            write_out(out, "psi symbol")?;
            write_out(out, &record.psi.symbol.two_row_display())?;
            write_out(
                out,
                &format!(
                    "psi: d = {}, orbit = {}, local system {}",
                    record.psi.d,
                    record.psi.orbit_text(),
                    if record.psi.local_system_trivial {
                        "trivial"
                    } else {
                        "nontrivial"
                    }
                ),
            )?;
            if let Some(m) = &record.modular {
                write_out(
                    out,
                    &format!(
                        "modular image: symbol {}, orbit = {}, local system {}",
                        m.symbol,
                        m.orbit_text(),
                        if m.local_system_trivial {
                            "trivial"
                        } else {
                            "nontrivial"
                        }
                    ),
                )?;
            }
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct TableRow {
    label: String,
    symbol: Option<Symbol>,
    d: Option<i64>,
    orbit: String,
    local_system_trivial: Option<bool>,
    modular: Option<String>,
}

#[derive(Serialize)]
struct TableRecord {
    #[serde(rename = "type")]
    ty: String,
    n: u64,
    ell: Option<u32>,
    rows: Vec<TableRow>,
}

fn table_rows(lie_type: LieType, n: u64, ell: Option<u32>) -> Result<Vec<TableRow>, Error> {
    let labels: Vec<ClassicalLabel> = match lie_type {
        LieType::B | LieType::C => bipartitions_of(n as u32)
            .into_iter()
            .map(ClassicalLabel::Ordered)
            .collect(),
        LieType::D => dlabels_of(n as u32)
            .into_iter()
            .map(ClassicalLabel::D)
            .collect(),
    };
    let mut rows = Vec::with_capacity(labels.len());
    for label in &labels {
        let psi = PairView::of(&psi_pair(lie_type, label)?);
        let modular = match ell {
            None => None,
            Some(ell) => {
                let regular = match label {
                    ClassicalLabel::Ordered(b) => b.is_l_regular(ell)?,
                    ClassicalLabel::D(l) => l.is_l_regular(ell)?,
                };
                if regular {
                    let pair = modular_pair(lie_type, label, ell)?;
                    let view = PairView::of(&pair);
                    Some(view.orbit_text())
                } else {
                    Some("-".into())
                }
            }
        };
        rows.push(TableRow {
            label: label.text(),
            d: Some(psi.d),
            orbit: psi.orbit_text(),
            local_system_trivial: Some(psi.local_system_trivial),
            symbol: Some(psi.symbol),
            modular,
        });
    }
    rows.sort_by(|a, b| a.d.cmp(&b.d).then_with(|| a.label.cmp(&b.label)));
    Ok(rows)
}

fn gl_table_rows(n: u64, ell: Option<u32>) -> Vec<TableRow> {
    let mut rows: Vec<TableRow> = partitions_of(n as u32)
        .into_iter()
        .map(|mu| {
            let modular = ell.map(|ell| {
                if mu.is_l_regular(ell) {
                    mu.conjugate().to_text()
                } else {
                    "-".into()
                }
            });
            TableRow {
                label: mu.to_text(),
                symbol: None,
                d: None,
                orbit: mu.conjugate().to_text(),
                local_system_trivial: None,
                modular,
            }
        })
        .collect();
    rows.sort_by(|a, b| a.label.cmp(&b.label));
    rows
}

fn cmd_table(
    ty: TypeFlag,
    n: u64,
    ell: Option<u32>,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    if n < 1 {
        return Err(Error::Parse("n must be at least 1".into()));
    }
    let guard = enumeration_guard();
    if n > guard {
        return Err(Error::RankGuard { n, max: guard });
    }
    let (ty_name, rows) = match ty.lie_type() {
        Some(lie_type) => (lie_type.as_str().to_string(), table_rows(lie_type, n, ell)?),
        None => ("A".to_string(), gl_table_rows(n, ell)),
    };
    let record = TableRecord {
        ty: ty_name,
        n,
        ell,
        rows,
    };
    match format {
        Format::Json => write_out(out, &serde_json::to_string_pretty(&record).unwrap())?,
        Format::Tsv => {
            write_out(out, "type\tn\tlabel\tsymbol\td\torbit\tlocal_system\tmodular")?;
            for row in &record.rows {
                write_out(
                    out,
                    &format!(
                        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                        record.ty,
                        record.n,
                        row.label,
                        row.symbol
                            .as_ref()
                            .map(|s| s.to_string())
                            .unwrap_or_else(|| "-".into()),
                        row.d.map(|d| d.to_string()).unwrap_or_else(|| "-".into()),
                        row.orbit,
                        row.local_system_trivial
                            .map(|b| b.to_string())
                            .unwrap_or_else(|| "-".into()),
                        row.modular.clone().unwrap_or_else(|| "-".into()),
                    ),
                )?;
            }
        }
        Format::Pretty => {
            write_out(
                out,
                &format!(
                    "correspondence table, type {}, n = {}{}",
                    record.ty,
                    record.n,
                    record
                        .ell
                        .map(|e| format!(", ell = {e}"))
                        .unwrap_or_default()
                ),
            )?;
            let headers = ["label", "symbol", "d", "orbit", "local system", "modular"];
            let mut table: Vec<[String; 6]> = Vec::new();
            for row in &record.rows {
                table.push([
                    row.label.clone(),
                    row.symbol
                        .as_ref()
                        .map(|s| s.to_string())
                        .unwrap_or_else(|| "-".into()),
                    row.d.map(|d| d.to_string()).unwrap_or_else(|| "-".into()),
                    row.orbit.clone(),
                    row.local_system_trivial
                        .map(|b| if b { "trivial" } else { "nontrivial" }.to_string())
                        .unwrap_or_else(|| "-".into()),
                    row.modular.clone().unwrap_or_else(|| "-".into()),
                ]);
            }
            let mut widths = [0usize; 6];
            for (i, h) in headers.iter().enumerate() {
                widths[i] = h.len();
            }
            for row in &table {
                for (i, cell) in row.iter().enumerate() {
                    widths[i] = widths[i].max(cell.len());
                }
            }
            let fmt_row = |cells: &[String; 6]| {
                cells
                    .iter()
                    .enumerate()
                    .map(|(i, c)| format!("{c:<width$}", width = widths[i]))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            let header_cells: [String; 6] = std::array::from_fn(|i| headers[i].to_string());
            write_out(out, &fmt_row(&header_cells))?;
            for row in &table {
                write_out(out, &fmt_row(row))?;
            }
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// quotient
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct QuotientRecord {
    #[serde(rename = "type")]
    ty: String,
    n: u64,
    lambda: Partition,
    quotient: Bipartition,
    oracle_agrees: bool,
    symbol: Symbol,
    d: i64,
}

fn cmd_quotient(
    ty: TypeFlag,
    lambda: &str,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    let lie_type = ty
        .lie_type()
        .ok_or_else(|| Error::Parse("quotient applies to types B, C, D".into()))?;
    let lambda = Partition::from_text(lambda)?;
    let quotient = two_quotient_of_partition(lie_type, &lambda)?;
    let oracle = lambda.two_quotient();
    let oracle_agrees = oracle.0 == quotient.first && oracle.1 == quotient.second;
    let symbol = match lie_type {
        LieType::C => Symbol::C(lusztig_symbol_c(&quotient)),
        LieType::B => Symbol::Bd(lusztig_symbol_b(&quotient)),
        LieType::D => Symbol::Bd(crate::correspondence::lusztig_symbol_d(
            &UnorderedBipartition::new(quotient.first.clone(), quotient.second.clone()),
        )),
    };
    let record = QuotientRecord {
        ty: lie_type.as_str().into(),
        n: quotient.size(),
        d: symbol.d_value(),
        lambda,
        quotient,
        oracle_agrees,
        symbol,
    };
    match format {
        Format::Json => write_out(out, &serde_json::to_string_pretty(&record).unwrap())?,
        Format::Tsv => {
            write_out(out, "type\tn\tlambda\tfirst\tsecond\toracle_agrees\tsymbol\td")?;
            write_out(
                out,
                &format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    record.ty,
                    record.n,
                    record.lambda.to_text(),
                    record.quotient.first.to_text(),
                    record.quotient.second.to_text(),
                    record.oracle_agrees,
                    record.symbol,
                    record.d,
                ),
            )?;
        }
        Format::Pretty => {
            write_out(out, &format!("lambda     {}", record.lambda))?;
            write_out(
                out,
                &format!("quotient   ({},{})", record.quotient.first, record.quotient.second),
            )?;
            write_out(out, &format!("oracle     {}", if record.oracle_agrees { "agrees" } else { "DISAGREES" }))?;
            write_out(out, "symbol")?;
            write_out(out, &record.symbol.two_row_display())?;
            write_out(out, &format!("d          {}", record.d))?;
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// straighten
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct StraightenStepView {
    swapped: Vec<(u32, u32)>,
    s: Vec<u32>,
    t: Vec<u32>,
}

#[derive(Serialize)]
struct StraightenRecord {
    input: Symbol,
    steps: Vec<StraightenStepView>,
    distinguished: Symbol,
    orbit: Partition,
    input_local_system_trivial: bool,
}

fn parse_row(text: &str) -> Result<Vec<u32>, Error> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split('.')
        .map(|piece| {
            piece
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad row entry '{piece}'")))
        })
        .collect()
}

fn cmd_straighten(
    ty: TypeFlag,
    s_row: &str,
    t_row: &str,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    let lie_type = ty
        .lie_type()
        .ok_or_else(|| Error::Parse("straighten applies to types B, C, D".into()))?;
    let symbol = symbol_from_rows(lie_type.as_str(), parse_row(s_row)?, parse_row(t_row)?)?;
    let straightened = straighten_symbol(&symbol)?;
    let orbit = orbit_partition_of_symbol(&symbol)?;
    let record = StraightenRecord {
        input_local_system_trivial: symbol.is_distinguished(),
        input: symbol,
        steps: straightened
            .steps
            .iter()
            .map(|s| StraightenStepView {
                swapped: s.swapped.clone(),
                s: s.s.clone(),
                t: s.t.clone(),
            })
            .collect(),
        distinguished: straightened.result,
        orbit,
    };
    match format {
        Format::Json => write_out(out, &serde_json::to_string_pretty(&record).unwrap())?,
        Format::Tsv => {
            write_out(out, "stage\tswapped\ts\tt")?;
            let (s, t) = record.input.rows();
            let row_text = |r: &[u32]| {
                r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(".")
            };
            write_out(out, &format!("input\t-\t{}\t{}", row_text(s), row_text(t)))?;
            for (i, step) in record.steps.iter().enumerate() {
                let swaps = step
                    .swapped
                    .iter()
                    .map(|(a, b)| format!("({a},{b})"))
                    .collect::<Vec<_>>()
                    .join(" ");
                write_out(
                    out,
                    &format!("step {}\t{}\t{}\t{}", i + 1, swaps, row_text(&step.s), row_text(&step.t)),
                )?;
            }
            let (s, t) = record.distinguished.rows();
            write_out(
                out,
                &format!("distinguished\t-\t{}\t{}", row_text(s), row_text(t)),
            )?;
            write_out(out, &format!("orbit\t-\t{}\t-", record.orbit.to_text()))?;
        }
        Format::Pretty => {
            write_out(out, "input")?;
            write_out(out, &record.input.two_row_display())?;
            for (i, step) in record.steps.iter().enumerate() {
                let swaps = step
                    .swapped
                    .iter()
                    .map(|(a, b)| format!("({a},{b})"))
                    .collect::<Vec<_>>()
                    .join(", ");
                write_out(out, &format!("step {}: swap {}", i + 1, swaps))?;
                let view = symbol_from_rows(
                    record.input.type_letter(),
                    step.s.clone(),
                    step.t.clone(),
                )
                .map(|s| s.two_row_display())
                .unwrap_or_else(|_| format!("{:?} / {:?}", step.s, step.t));
                write_out(out, &view)?;
            }
            write_out(out, "distinguished")?;
            write_out(out, &record.distinguished.two_row_display())?;
            write_out(out, &format!("orbit      {}", record.orbit))?;
            write_out(
                out,
                &format!(
                    "local system of input: {}",
                    if record.input_local_system_trivial {
                        "trivial"
                    } else {
                        "nontrivial"
                    }
                ),
            )?;
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(
    prop: &str,
    ty: Option<TypeFlag>,
    max_n: u64,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    let guard = enumeration_guard();
    if max_n > guard {
        return Err(Error::RankGuard { n: max_n, max: guard });
    }
    let lie_type = match ty {
        None => None,
        Some(flag) => Some(flag.lie_type().ok_or_else(|| {
            Error::Parse("verification sweeps cover types B, C, D (and GL via gl-conjugation)".into())
        })?),
    };
    let properties: Vec<Property> = if prop == "all" {
        Property::ALL.to_vec()
    } else {
        vec![Property::parse(prop).ok_or_else(|| {
            Error::Parse(format!(
                "unknown property '{prop}'; known: all, {}",
                Property::ALL
                    .iter()
                    .map(|p| p.name())
                    .collect::<Vec<_>>()
                    .join(", ")
            ))
        })?]
    };
    let mut reports: Vec<VerificationReport> = Vec::new();
    for p in properties {
        reports.extend(run_property(p, lie_type, max_n as u32));
    }
    let all_passed = reports.iter().all(|r| r.passed);
    match format {
        Format::Json => write_out(out, &serde_json::to_string_pretty(&reports).unwrap())?,
        Format::Tsv => {
            write_out(out, "property\tscope\tpassed\tcases\telapsed_ms\tcounterexample")?;
            for r in &reports {
                write_out(
                    out,
                    &format!(
                        "{}\t{}\t{}\t{}\t{}\t{}",
                        r.property,
                        r.scope,
                        r.passed,
                        r.cases,
                        r.elapsed_ms,
                        r.counterexample
                            .as_ref()
                            .map(|c| c.to_string())
                            .unwrap_or_else(|| "-".into()),
                    ),
                )?;
            }
        }
        Format::Pretty => {
            for r in &reports {
                write_out(
                    out,
                    &format!(
                        "{} {:<28} {:<24} cases={:<8} {} ms",
                        if r.passed { "PASS" } else { "FAIL" },
                        r.property,
                        r.scope,
                        r.cases,
                        r.elapsed_ms,
                    ),
                )?;
                if let Some(c) = &r.counterexample {
                    write_out(out, &format!("     counterexample: {c}"))?;
                }
            }
        }
    }
    Ok(if all_passed { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// basic-set
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct BasicSetRecord {
    ordinary: Vec<String>,
    modular: Vec<String>,
    beta: Option<Vec<(String, String)>>,
    message: String,
}

fn cmd_basic_set(
    matrix_path: &std::path::Path,
    order_path: &std::path::Path,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    let read = |path: &std::path::Path| -> Result<String, Error> {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
    };
    let matrix: DecompositionMatrix = serde_json::from_str(&read(matrix_path)?)
        .map_err(|e| Error::Parse(format!("{}: {e}", matrix_path.display())))?;

    #[derive(serde::Deserialize)]
    struct OrderFile {
        pairs: Vec<(String, String)>,
    }
    let order_file: OrderFile = serde_json::from_str(&read(order_path)?)
        .map_err(|e| Error::Parse(format!("{}: {e}", order_path.display())))?;
    let order = OrderRelation::from_pairs(
        matrix.ordinary().to_vec(),
        order_file.pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
    )?;

    let betas = find_betas(&matrix, &order)?;
    let record = match betas.len() {
        0 => BasicSetRecord {
            ordinary: matrix.ordinary().to_vec(),
            modular: matrix.modular().to_vec(),
            beta: None,
            message: "no basic set datum exists for this order".into(),
        },
        1 => BasicSetRecord {
            ordinary: matrix.ordinary().to_vec(),
            modular: matrix.modular().to_vec(),
            beta: Some(betas[0].describe(&matrix)),
            message: "unique injection found; the pair is a basic set datum".into(),
        },
        _ => unreachable!("a partial order admits at most one compatible injection"),
    };
    match format {
        Format::Json => write_out(out, &serde_json::to_string_pretty(&record).unwrap())?,
        Format::Tsv => {
            write_out(out, "modular\tordinary")?;
            if let Some(beta) = &record.beta {
                for (f, e) in beta {
                    write_out(out, &format!("{f}\t{e}"))?;
                }
            }
        }
        Format::Pretty => {
            write_out(out, &record.message)?;
            if let Some(beta) = &record.beta {
                for (f, e) in beta {
                    write_out(out, &format!("  beta({f}) = {e}"))?;
                }
            }
        }
    }
    Ok(0)
}
