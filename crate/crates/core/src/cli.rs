//! Command-line front end. Every subcommand prints one JSON document (or TSV
//! for point sets) on stdout; failures print a single `error[kind]: ...`
//! line on stderr and exit with 2 (input) or 3 (budget).

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{Field, FieldSpec, GaloisField};
use crate::braid::{parse_monodromy, zvk_presentation, ArtinConvention, BraidError};
use crate::charvar::{
    budget_from_env, classify, enumerate_char, has_essential_coordinate, has_essential_coordinate_torsion,
    torsion_scan, CharSlice, CharVarError,
};
use crate::covers::{
    abelianization_invariants, b1_branched, b1_unbranched, rs_subgroup, CoverError, CoverSpec, SakumaReport,
    Transversal, DEFAULT_INDEX_BOUND,
};
use crate::fox::{alexander_matrix, delete_component, AlexMatrix, FoxError};
use crate::torus::{coordinate_pieces, parse_map, parse_map_matrix, parse_set, TorsionSubtorusSet, TorusError};
use crate::words::{abelianize, parse_presentation, GroupPresentation, WordError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "charvar", version, about = "Characteristic varieties of plane-curve complements")]
pub struct Cli {
    /// Enumeration budget (overrides CHARVAR_BUDGET).
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Alexander matrix of a presentation.
    Alexander {
        input: PathBuf,
        /// Delete these components first.
        #[arg(long)]
        delete: Vec<String>,
    },
    /// Points of Char*_k.
    Charvar {
        input: PathBuf,
        #[command(flatten)]
        field: FieldArgs,
        /// Print the points as TSV.
        #[arg(long)]
        tsv: bool,
    },
    /// Coordinate and essential labels of the points of Char*_k.
    Classify {
        input: PathBuf,
        #[command(flatten)]
        field: FieldArgs,
        /// Also test every component for essential coordinate points.
        #[arg(long)]
        all_components: bool,
    },
    /// First Betti number of an abelian cover by Sakuma's formula.
    Sakuma {
        input: PathBuf,
        /// Cover spec, inline or a file.
        #[arg(long)]
        cover: String,
        #[arg(long)]
        branched: bool,
        #[arg(long, default_value_t = DEFAULT_INDEX_BOUND)]
        index_bound: u64,
    },
    /// Reidemeister-Schreier presentation of the cover subgroup.
    Rs {
        input: PathBuf,
        #[arg(long)]
        cover: String,
        #[arg(long, value_enum, default_value_t = TransversalArg::Bfs)]
        transversal: TransversalArg,
        #[arg(long, default_value_t = DEFAULT_INDEX_BOUND)]
        index_bound: u64,
        /// Print the subgroup presentation in the presentation DSL.
        #[arg(long)]
        dsl: bool,
    },
    /// Zariski-van Kampen presentation from braid monodromy.
    Zvk {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ConventionArg::Standard)]
        convention: ConventionArg,
        /// Print the presentation in the presentation DSL.
        #[arg(long)]
        dsl: bool,
    },
    /// Monomial sets: pieces, images and enumeration.
    Torus {
        #[arg(long)]
        set: PathBuf,
        #[arg(long)]
        map: Option<PathBuf>,
        /// Push equations through a map even if it is not unimodular.
        #[arg(long)]
        substitute: bool,
        /// Enumerate over this finite field.
        #[arg(long)]
        enumerate: Option<String>,
        #[arg(long)]
        tsv: bool,
    },
}

#[derive(clap::Args, Debug, Clone)]
pub struct FieldArgs {
    /// F<q>, Q or Q(zeta<N>).
    #[arg(long)]
    pub field: Option<String>,
    /// Scan N-torsion characters over Q(zeta_N).
    #[arg(long)]
    pub torsion: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum TransversalArg {
    Bfs,
    Dfs,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum ConventionArg {
    Standard,
    Mirrored,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Input,
    Budget,
}

#[derive(Debug, Clone)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            kind: ErrorKind::Input,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind {
            ErrorKind::Input => EXIT_INPUT,
            ErrorKind::Budget => EXIT_BUDGET,
        }
    }

    /// `error[input]: ...` on one line.
    pub fn line(&self) -> String {
        let kind = match self.kind {
            ErrorKind::Input => "input",
            ErrorKind::Budget => "budget",
        };
        format!("error[{kind}]: {}", self.message.replace('\n', " "))
    }
}

impl From<CharVarError> for CliError {
    fn from(e: CharVarError) -> Self {
        let kind = match e {
            CharVarError::Budget { .. } => ErrorKind::Budget,
            _ => ErrorKind::Input,
        };
        CliError {
            kind,
            message: e.to_string(),
        }
    }
}

impl From<CoverError> for CliError {
    fn from(e: CoverError) -> Self {
        match e {
            CoverError::CharVar(c) => c.into(),
            CoverError::IndexBound { .. } => CliError {
                kind: ErrorKind::Budget,
                message: e.to_string(),
            },
            other => CliError::input(other.to_string()),
        }
    }
}

impl From<TorusError> for CliError {
    fn from(e: TorusError) -> Self {
        let kind = match e {
            TorusError::Budget { .. } => ErrorKind::Budget,
            _ => ErrorKind::Input,
        };
        CliError {
            kind,
            message: e.to_string(),
        }
    }
}

macro_rules! input_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::input(e.to_string())
            }
        }
    )*};
}

input_error!(WordError, FoxError, BraidError, crate::algebra::AlgebraError);

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn load_presentation(path: &Path) -> Result<GroupPresentation, CliError> {
    let text = read(path)?;
    parse_presentation(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn load_cover(arg: &str) -> Result<CoverSpec, CliError> {
    let text = if Path::new(arg).is_file() {
        read(Path::new(arg))?
    } else {
        arg.to_string()
    };
    Ok(text.parse::<CoverSpec>()?)
}

/// Parses `argv` (program name first) and runs the subcommand.
pub fn run_with(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind as K;
            if matches!(e.kind(), K::DisplayHelp | K::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let msg = e.to_string();
            let first = msg
                .lines()
                .map(|l| l.trim_start_matches("error:").trim())
                .find(|l| !l.is_empty())
                .unwrap_or("bad arguments");
            let _ = writeln!(err, "{}", CliError::input(first).line());
            return EXIT_INPUT;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "{}", e.line());
            e.exit_code()
        }
    }
}

pub fn run(argv: &[String]) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// Runs a parsed command and returns its stdout payload.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let budget = cli.budget.filter(|&b| b > 0).unwrap_or_else(budget_from_env);
    match &cli.command {
        Command::Alexander { input, delete } => {
            let p = load_presentation(input)?;
            let mut a = alexander_matrix(&p);
            for name in delete {
                let c = p
                    .component_index(name)
                    .ok_or_else(|| CliError::input(format!("unknown component `{name}`")))?;
                a = delete_component(&a, c)?;
            }
            let j = a.matrix().to_json(a.variable_names());
            Ok(pretty(&serde_json::to_value(j).expect("json")))
        }
        Command::Charvar { input, field, tsv } => {
            let a = alexander_matrix(&load_presentation(input)?);
            charvar_command(&a, field, budget, *tsv)
        }
        Command::Classify {
            input,
            field,
            all_components,
        } => {
            let a = alexander_matrix(&load_presentation(input)?);
            classify_command(&a, field, budget, *all_components)
        }
        Command::Sakuma {
            input,
            cover,
            branched,
            index_bound,
        } => {
            let p = load_presentation(input)?;
            let spec = load_cover(cover)?;
            sakuma_command(&p, &spec, *branched, *index_bound)
        }
        Command::Rs {
            input,
            cover,
            transversal,
            index_bound,
            dsl,
        } => {
            let p = load_presentation(input)?;
            let spec = load_cover(cover)?;
            let how = match transversal {
                TransversalArg::Bfs => Transversal::BreadthFirst,
                TransversalArg::Dfs => Transversal::DepthFirst,
            };
            let sp = rs_subgroup(&p, &spec, how, *index_bound)?;
            if *dsl {
                return Ok(sp.presentation.to_dsl());
            }
            let (b1, torsion) = abelianization_invariants(&sp);
            let names = p.generator_names();
            Ok(pretty(&json!({
                "cover": spec.to_string(),
                "index": sp.index,
                "schreier_generators": sp.schreier_generators,
                "relators": sp.presentation.n_rels(),
                "transversal": sp.transversal.iter().map(|w| w.format_with(&names)).collect::<Vec<_>>(),
                "b1": b1,
                "torsion": torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            })))
        }
        Command::Zvk { input, convention, dsl } => {
            let m = parse_monodromy(&read(input)?)?;
            let conv = match convention {
                ConventionArg::Standard => ArtinConvention::Standard,
                ConventionArg::Mirrored => ArtinConvention::Mirrored,
            };
            let p = zvk_presentation(&m, conv)?;
            if *dsl {
                return Ok(p.to_dsl());
            }
            let ab = abelianize(&p);
            Ok(pretty(&json!({
                "generators": p.generators().iter().map(|g| json!({"name": g.name, "component": p.components()[g.component]})).collect::<Vec<_>>(),
                "components": p.components(),
                "relators": p.relators().iter().map(|w| p.format_word(w)).collect::<Vec<_>>(),
                "abelianization": {
                    "rank": ab.rank,
                    "torsion": ab.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                },
            })))
        }
        Command::Torus {
            set,
            map,
            substitute,
            enumerate,
            tsv,
        } => {
            let s = parse_set(&read(set)?)?;
            let s = match map {
                None => s,
                Some(path) => {
                    let text = read(path)?;
                    if *substitute {
                        let (source, target, m) = parse_map_matrix(&text)?;
                        if source != s.names {
                            return Err(CliError::input("map source coordinates differ from the set's"));
                        }
                        s.substitute(&m, &target)
                    } else {
                        s.image(&parse_map(&text)?)?
                    }
                }
            };
            torus_command(&s, enumerate.as_deref(), budget, *tsv)
        }
    }
}

enum FieldChoice {
    Finite(GaloisField),
    Torsion(u64, Option<String>),
}

fn field_choice(args: &FieldArgs) -> Result<FieldChoice, CliError> {
    match (&args.field, args.torsion) {
        (Some(_), Some(_)) => Err(CliError::input("give either --field or --torsion")),
        (None, None) => Err(CliError::input("one of --field or --torsion is required")),
        (None, Some(n)) if n == 0 => Err(CliError::input("--torsion needs N >= 1")),
        (None, Some(n)) => Ok(FieldChoice::Torsion(n, None)),
        (Some(f), None) => match f.parse::<FieldSpec>()? {
            FieldSpec::Galois(q) => Ok(FieldChoice::Finite(GaloisField::new(q)?)),
            // the roots of unity of Q are ±1
            FieldSpec::Rationals => Ok(FieldChoice::Torsion(2, Some("Q".into()))),
            FieldSpec::Cyclotomic(n) => Ok(FieldChoice::Torsion(n, None)),
        },
    }
}

fn slice_json<F: Field>(field: &F, slice: &CharSlice<F::Elem>, name: &str) -> Value {
    json!({
        "field": name,
        "k": slice.k,
        "variables": slice.variables,
        "provenance": slice.provenance,
        "points": slice.formatted(field),
    })
}

fn tsv<F: Field>(field: &F, slice: &CharSlice<F::Elem>) -> String {
    let mut s = slice.variables.join("\t");
    s.push('\n');
    for p in slice.formatted(field) {
        s.push_str(&p.join("\t"));
        s.push('\n');
    }
    s
}

fn charvar_command(a: &AlexMatrix, args: &FieldArgs, budget: u64, as_tsv: bool) -> Result<String, CliError> {
    match field_choice(args)? {
        FieldChoice::Finite(f) => {
            let slice = enumerate_char(&f, a, args.k, budget)?;
            Ok(if as_tsv {
                tsv(&f, &slice)
            } else {
                pretty(&slice_json(&f, &slice, &f.name()))
            })
        }
        FieldChoice::Torsion(n, label) => {
            let (f, slice) = torsion_scan(a, n, args.k, budget)?;
            let name = label.unwrap_or_else(|| f.name());
            Ok(if as_tsv {
                tsv(&f, &slice)
            } else {
                pretty(&slice_json(&f, &slice, &name))
            })
        }
    }
}

fn classification_json<F: Field>(field: &F, a: &AlexMatrix, slice: &CharSlice<F::Elem>) -> Result<Vec<Value>, CliError> {
    let names = a.variable_names();
    let pick = |v: &[usize]| v.iter().map(|&i| names[i].clone()).collect::<Vec<_>>();
    Ok(classify(field, a, slice)?
        .iter()
        .map(|c| {
            json!({
                "point": c.point.format(field),
                "coordinate": c.is_coordinate,
                "trivial_coordinates": pick(&c.vanishing),
                "essential": c.is_essential,
                "deletion_witnesses": pick(&c.witnesses),
            })
        })
        .collect())
}

fn component_json<E, F: Field<Elem = E>>(field: &F, comp: &str, found: (bool, Vec<crate::charvar::Character<E>>)) -> Value
where
    E: Clone,
{
    json!({
        "component": comp,
        "has_essential_coordinate": found.0,
        "witnesses": found.1.iter().map(|x| x.format(field)).collect::<Vec<_>>(),
    })
}

fn classify_command(a: &AlexMatrix, args: &FieldArgs, budget: u64, all: bool) -> Result<String, CliError> {
    let comps = a.presentation().components().to_vec();
    let live: Vec<usize> = a.variables().to_vec();
    let mut doc = match field_choice(args)? {
        FieldChoice::Finite(f) => {
            let slice = enumerate_char(&f, a, args.k, budget)?;
            let mut doc = slice_json(&f, &slice, &f.name());
            doc["classification"] = Value::Array(classification_json(&f, a, &slice)?);
            if all {
                doc["components"] = Value::Array(
                    live.iter()
                        .map(|&c| Ok(component_json(&f, &comps[c], has_essential_coordinate(&f, a, c, args.k, budget)?)))
                        .collect::<Result<_, CliError>>()?,
                );
            }
            doc
        }
        FieldChoice::Torsion(n, label) => {
            let (f, slice) = torsion_scan(a, n, args.k, budget)?;
            let mut doc = slice_json(&f, &slice, &label.unwrap_or_else(|| f.name()));
            doc["classification"] = Value::Array(classification_json(&f, a, &slice)?);
            if all {
                doc["components"] = Value::Array(
                    live.iter()
                        .map(|&c| {
                            Ok(component_json(
                                &f,
                                &comps[c],
                                has_essential_coordinate_torsion(a, c, n, args.k, budget)?,
                            ))
                        })
                        .collect::<Result<_, CliError>>()?,
                );
            }
            doc
        }
    };
    doc["k"] = json!(args.k);
    Ok(pretty(&doc))
}

fn sakuma_json(r: &SakumaReport) -> Value {
    Value::Array(
        r.per_character
            .iter()
            .map(|(xi, deleted, d)| json!({"character": xi, "deleted": deleted, "depth": d}))
            .collect(),
    )
}

fn sakuma_command(p: &GroupPresentation, spec: &CoverSpec, branched: bool, bound: u64) -> Result<String, CliError> {
    let report = if branched {
        b1_branched(p, spec)?
    } else {
        b1_unbranched(p, spec)?
    };
    let mut doc = json!({
        "cover": spec.to_string(),
        "branched": branched,
        "field": report.field,
        "b1_base": report.base,
        "b1_formula": report.b1,
        "per_character_depths": sakuma_json(&report),
        "b1_rs": Value::Null,
        "torsion_rs": Value::Null,
    });
    if !branched {
        // the unbranched cover is the one Reidemeister-Schreier sees
        let sp = rs_subgroup(p, spec, Transversal::BreadthFirst, bound)?;
        let (b1, torsion) = abelianization_invariants(&sp);
        doc["b1_rs"] = json!(b1);
        doc["torsion_rs"] = json!(torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>());
    }
    Ok(pretty(&doc))
}

fn torus_command(s: &TorsionSubtorusSet, field: Option<&str>, budget: u64, as_tsv: bool) -> Result<String, CliError> {
    let pieces: Vec<Value> = coordinate_pieces(s)
        .iter()
        .map(|r| {
            json!({
                "piece": r.piece,
                "empty": r.empty,
                "dimension": r.dimension,
                "coordinate": r.is_coordinate(),
                "forced_one": r.forced_one.iter().map(|&i| s.names[i].clone()).collect::<Vec<_>>(),
                "forced_other": r.forced_other.iter().map(|(i, ph)| json!([s.names[*i], ph])).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut doc = json!({
        "coords": s.names,
        "set": s.to_dsl().lines().collect::<Vec<_>>(),
        "pieces": pieces,
    });
    if let Some(name) = field {
        let q = match name.parse::<FieldSpec>()? {
            FieldSpec::Galois(q) => q,
            other => return Err(CliError::input(format!("--enumerate needs a finite field, got {other}"))),
        };
        let f = GaloisField::new(q)?;
        let points = s.enumerate(&f, budget)?;
        let formatted: Vec<Vec<String>> = points.iter().map(|p| p.format(&f)).collect();
        if as_tsv {
            let mut out = s.names.join("\t");
            out.push('\n');
            for p in formatted {
                out.push_str(&p.join("\t"));
                out.push('\n');
            }
            return Ok(out);
        }
        doc["field"] = json!(f.name());
        doc["count"] = json!(formatted.len());
        doc["points"] = json!(formatted);
    }
    Ok(pretty(&doc))
}
