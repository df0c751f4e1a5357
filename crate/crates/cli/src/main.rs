use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use ccc_core::ccc::UnionShape;
use ccc_core::closed_forms::{classify_closed, closed_energies, closed_spectrum, energy_ordering};
use ccc_core::rational::{approx, Rational};
use ccc_core::spectra::{EnergyReport, MatrixKind, Spectrum};
use ccc_core::verify::{brute_force, check_instance, instances, sweep_specs, BruteForce, SweepOptions};
use ccc_core::{
    classify_from_energies, Classification, EnergyOrdering, Family, GroupSpec,
};

mod render;

use render::{json, verdict, Format, Table};

const EXIT_INVALID: u8 = 2;
const EXIT_DISAGREE: u8 = 3;

/// Commuting conjugacy class graphs: spectra, energies and verification.
#[derive(Parser)]
#[command(name = "ccc", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Append decimal approximations of energies, labelled as approximate.
    #[arg(long, global = true)]
    approx: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Brute-force and closed-form spectra side by side.
    Spectra {
        #[command(flatten)]
        group: GroupArgs,
        /// A, L or Q (default: all three).
        #[arg(long)]
        matrix: Option<MatrixKind>,
    },
    /// Vertex and edge counts, energies, ordering and classification.
    Energies {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Sweep a parameter range comparing brute force with the closed forms.
    Verify(VerifyArgs),
    /// One row per parameter value.
    Table(TableArgs),
    /// Export the graph (json: adjacency list, text: edge list).
    Graph {
        #[command(flatten)]
        group: GroupArgs,
    },
}

#[derive(Args)]
struct GroupArgs {
    /// d2n, q4m, u, v8n or sd8n.
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
}

impl GroupArgs {
    fn spec(&self) -> Result<GroupSpec, Failure> {
        GroupSpec::new(self.family, self.n, self.m).map_err(invalid)
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated families, or "all".
    #[arg(long, value_delimiter = ',', default_value = "all")]
    families: Vec<String>,
    #[arg(long, default_value_t = 12)]
    max_n: u32,
    #[arg(long, default_value_t = 12)]
    max_m: u32,
    /// Also check the abelian groups U(n,2).
    #[arg(long = "include-u-m2")]
    include_u_m2: bool,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n_from: Option<u32>,
    #[arg(long)]
    n_to: Option<u32>,
    #[arg(long)]
    m_from: Option<u32>,
    #[arg(long)]
    m_to: Option<u32>,
}

enum Failure {
    Invalid(String),
}

fn invalid(e: impl std::fmt::Display) -> Failure {
    Failure::Invalid(e.to_string())
}

struct Output {
    text: String,
    agree: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Spectra { group, matrix } => cmd_spectra(group, *matrix, cli.format),
        Command::Energies { group } => cmd_energies(group, cli.format, cli.approx),
        Command::Verify(args) => cmd_verify(args, cli.format),
        Command::Table(args) => cmd_table(args, cli.format, cli.approx),
        Command::Graph { group } => cmd_graph(group, cli.format),
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            if out.agree {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_DISAGREE)
            }
        }
        Err(Failure::Invalid(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

fn analyze(spec: &GroupSpec) -> Result<BruteForce, Failure> {
    brute_force(spec).map_err(invalid)
}

#[derive(Serialize)]
struct SpectraJson {
    spec: GroupSpec,
    shape: UnionShape,
    matrices: Vec<MatrixJson>,
}

#[derive(Serialize)]
struct MatrixJson {
    matrix: MatrixKind,
    brute_force: Spectrum,
    closed_form: Option<Spectrum>,
    agree: bool,
}

fn cmd_spectra(group: &GroupArgs, matrix: Option<MatrixKind>, format: Format) -> Result<Output, Failure> {
    let spec = group.spec()?;
    let bf = analyze(&spec)?;
    let kinds = matrix.map_or(MatrixKind::ALL.to_vec(), |k| vec![k]);
    let rows: Vec<MatrixJson> = kinds
        .into_iter()
        .map(|kind| {
            let closed = closed_spectrum(&spec, kind).ok();
            let computed = bf.spectra.get(kind).clone();
            MatrixJson {
                matrix: kind,
                agree: closed.as_ref() == Some(&computed),
                brute_force: computed,
                closed_form: closed,
            }
        })
        .collect();
    let agree = rows.iter().all(|r| r.agree);
    let closed_text = |r: &MatrixJson| {
        r.closed_form
            .as_ref()
            .map_or("unavailable".to_string(), |s| s.to_string())
    };

    let text = match format {
        Format::Json => json(&SpectraJson {
            spec,
            shape: bf.shape.clone(),
            matrices: rows,
        }),
        Format::Text => {
            let mut out = format!("{spec}: {}\n", bf.shape);
            for r in &rows {
                out.push_str(&format!(
                    "{}: {} | {} | {}\n",
                    r.matrix,
                    r.brute_force,
                    closed_text(r),
                    verdict(r.agree)
                ));
            }
            out
        }
        Format::Csv | Format::Md => {
            let mut table = Table::new(["group", "matrix", "brute_force", "closed_form", "verdict"]);
            for r in &rows {
                table.push(vec![
                    spec.to_string(),
                    r.matrix.to_string(),
                    r.brute_force.to_string(),
                    closed_text(r),
                    verdict(r.agree).to_string(),
                ]);
            }
            table.render(format)
        }
    };
    Ok(Output { text, agree })
}

#[derive(Serialize)]
struct EnergiesJson {
    spec: GroupSpec,
    shape: UnionShape,
    computed: EnergyReport,
    closed: Option<EnergyReport>,
    ordering: Pair<Option<EnergyOrdering>>,
    classification: Pair<Option<Classification>>,
    agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    approx: Option<ApproxJson>,
}

#[derive(Serialize)]
struct Pair<T> {
    computed: T,
    closed: T,
}

#[derive(Serialize)]
struct ApproxJson {
    energy: f64,
    laplacian_energy: f64,
    signless_laplacian_energy: f64,
}

fn cmd_energies(group: &GroupArgs, format: Format, with_approx: bool) -> Result<Output, Failure> {
    let spec = group.spec()?;
    let bf = analyze(&spec)?;
    let computed = bf.report.clone();
    let closed = closed_energies(&spec).ok();
    let ordering = Pair {
        computed: bf.ordering(),
        closed: energy_ordering(&spec).ok(),
    };
    let classification = Pair {
        computed: Some(classify_from_energies(&computed)),
        closed: classify_closed(&spec).ok(),
    };
    let agree = closed.as_ref() == Some(&computed)
        && ordering.closed.is_some()
        && ordering.computed == ordering.closed
        && classification.computed == classification.closed;

    if format == Format::Json {
        let approx = with_approx.then(|| ApproxJson {
            energy: approx(&computed.energy),
            laplacian_energy: approx(&computed.laplacian_energy),
            signless_laplacian_energy: approx(&computed.signless_laplacian_energy),
        });
        let text = json(&EnergiesJson {
            spec,
            shape: bf.shape.clone(),
            computed,
            closed,
            ordering,
            classification,
            agree,
            approx,
        });
        return Ok(Output { text, agree });
    }

    let mut header = vec!["quantity", "computed", "closed", "verdict"];
    if with_approx {
        header.push("approx");
    }
    let mut table = Table::new(header);
    let fmt_opt = |v: Option<String>| v.unwrap_or_else(|| "unavailable".into());
    let mut row = |name: &str, c: String, k: Option<String>, exact: Option<&Rational>| {
        let mut cells = vec![
            name.to_string(),
            c.clone(),
            fmt_opt(k.clone()),
            verdict(k.as_deref() == Some(c.as_str())).to_string(),
        ];
        if with_approx {
            cells.push(exact.map_or("-".into(), |r| format!("{:.6}", approx(r))));
        }
        table.push(cells);
    };
    let cl = closed.as_ref();
    row("|V|", computed.vertex_count.to_string(), cl.map(|r| r.vertex_count.to_string()), None);
    row("|e|", computed.edge_count.to_string(), cl.map(|r| r.edge_count.to_string()), None);
    row(
        "mean degree",
        computed.mean_degree.to_string(),
        cl.map(|r| r.mean_degree.to_string()),
        Some(&computed.mean_degree),
    );
    row("E", computed.energy.to_string(), cl.map(|r| r.energy.to_string()), Some(&computed.energy));
    row(
        "LE",
        computed.laplacian_energy.to_string(),
        cl.map(|r| r.laplacian_energy.to_string()),
        Some(&computed.laplacian_energy),
    );
    row(
        "LE+",
        computed.signless_laplacian_energy.to_string(),
        cl.map(|r| r.signless_laplacian_energy.to_string()),
        Some(&computed.signless_laplacian_energy),
    );
    row(
        "ordering",
        fmt_opt(ordering.computed.map(|o| o.to_string())),
        ordering.closed.map(|o| o.to_string()),
        None,
    );
    row(
        "classification",
        fmt_opt(classification.computed.map(|c| c.to_string())),
        classification.closed.map(|c| c.to_string()),
        None,
    );

    let text = match format {
        Format::Text => format!("{spec}: {}\n{}", bf.shape, table.to_text()),
        _ => table.render(format),
    };
    Ok(Output { text, agree })
}

fn parse_families(raw: &[String]) -> Result<Vec<Family>, Failure> {
    if raw.iter().any(|f| f.eq_ignore_ascii_case("all")) {
        return Ok(Family::ALL.to_vec());
    }
    raw.iter().map(|f| f.parse::<Family>().map_err(invalid)).collect()
}

fn cmd_verify(args: &VerifyArgs, format: Format) -> Result<Output, Failure> {
    let families = parse_families(&args.families)?;
    let specs = instances(&families, args.max_n, args.max_m, args.include_u_m2);
    if specs.is_empty() {
        return Err(invalid("the parameter range contains no legal group"));
    }
    let options = SweepOptions {
        include_um2: args.include_u_m2,
        ..SweepOptions::default()
    };
    let report = sweep_specs(&specs, &options);
    let text = match format {
        Format::Json => json(&report),
        Format::Text => report.to_text(),
        Format::Csv | Format::Md => {
            let mut table = Table::new(["group", "category", "detail"]);
            for m in &report.mismatches {
                table.push(vec![m.spec.to_string(), m.category.to_string(), m.detail.clone()]);
            }
            for v in &report.conjecture_violations {
                table.push(vec![v.spec.to_string(), format!("Conjecture {}", v.which), v.detail.clone()]);
            }
            let body = table.render(format);
            if format == Format::Md {
                format!(
                    "{} instances checked, {} mismatches, {} conjecture violations\n\n{body}",
                    report.instances_checked,
                    report.mismatches.len(),
                    report.conjecture_violations.len()
                )
            } else {
                body
            }
        }
    };
    Ok(Output {
        text,
        agree: report.passed(),
    })
}

fn range(family: Family, name: &str, from: Option<u32>, to: Option<u32>, used: bool) -> Result<Vec<Option<u32>>, Failure> {
    if !used {
        if from.is_some() || to.is_some() {
            return Err(invalid(format!("--{name}-from/--{name}-to do not apply to {family}")));
        }
        return Ok(vec![None]);
    }
    let minimum = match (family, name) {
        (Family::Dihedral, _) => 3,
        _ => 2,
    };
    let start = from.unwrap_or(minimum);
    let end = to.unwrap_or(start);
    if start > end {
        return Err(invalid(format!("empty range {name} in [{start}, {end}]")));
    }
    Ok((start..=end).map(Some).collect())
}

#[derive(Serialize)]
struct TableRowJson {
    spec: GroupSpec,
    shape: UnionShape,
    spectra: ccc_core::Spectra,
    energies: EnergyReport,
    ordering: Option<EnergyOrdering>,
    classification: Classification,
    closed_agrees: bool,
}

fn cmd_table(args: &TableArgs, format: Format, with_approx: bool) -> Result<Output, Failure> {
    let family = args.family;
    let ns = range(family, "n", args.n_from, args.n_to, family.uses_n())?;
    let ms = range(family, "m", args.m_from, args.m_to, family.uses_m())?;
    let mut specs = Vec::new();
    for &n in &ns {
        for &m in &ms {
            specs.push(GroupSpec::new(family, n, m).map_err(invalid)?);
        }
    }

    let options = SweepOptions::default();
    let mut rows = Vec::with_capacity(specs.len());
    for spec in &specs {
        let bf = analyze(spec)?;
        let closed_agrees = check_instance(spec, &options).mismatches.is_empty();
        rows.push(TableRowJson {
            spec: *spec,
            ordering: bf.ordering(),
            classification: classify_from_energies(&bf.report),
            shape: bf.shape,
            spectra: bf.spectra,
            energies: bf.report,
            closed_agrees,
        });
    }

    if format == Format::Json {
        return Ok(Output {
            text: json(&rows),
            agree: true,
        });
    }
    let mut header = vec![
        "group", "n", "m", "shape", "|V|", "|e|", "A", "L", "Q", "E", "LE", "LE+", "ordering",
        "classification", "closed_form",
    ];
    if with_approx {
        header.extend(["E (approx)", "LE (approx)", "LE+ (approx)"]);
    }
    let mut table = Table::new(header);
    let opt = |v: Option<u32>| v.map_or("-".to_string(), |x| x.to_string());
    for r in &rows {
        let e = &r.energies;
        let mut cells = vec![
            r.spec.to_string(),
            opt(r.spec.n()),
            opt(r.spec.m()),
            r.shape.to_string(),
            e.vertex_count.to_string(),
            e.edge_count.to_string(),
            r.spectra.a.to_string(),
            r.spectra.l.to_string(),
            r.spectra.q.to_string(),
            e.energy.to_string(),
            e.laplacian_energy.to_string(),
            e.signless_laplacian_energy.to_string(),
            r.ordering.map_or("-".to_string(), |o| o.to_string()),
            r.classification.to_string(),
            verdict(r.closed_agrees).to_string(),
        ];
        if with_approx {
            for x in [&e.energy, &e.laplacian_energy, &e.signless_laplacian_energy] {
                cells.push(format!("{:.6}", approx(x)));
            }
        }
        table.push(cells);
    }
    Ok(Output {
        text: table.render(format),
        agree: true,
    })
}

fn cmd_graph(group: &GroupArgs, format: Format) -> Result<Output, Failure> {
    let spec = group.spec()?;
    let graph = ccc_core::build_ccc(&spec).map_err(invalid)?;
    let text = match format {
        Format::Json => json(&graph.to_adjacency_list()),
        Format::Text => graph.to_edge_list(),
        Format::Csv => {
            let mut table = Table::new(["u", "v"]);
            for (u, v) in graph.edges() {
                table.push(vec![u.to_string(), v.to_string()]);
            }
            table.to_csv()
        }
        Format::Md => return Err(invalid("graph supports json, csv and text")),
    };
    Ok(Output { text, agree: true })
}
