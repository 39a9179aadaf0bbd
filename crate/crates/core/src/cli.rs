//! Command-line front end. Every artifact is deterministic: identical
//! invocations produce byte-identical output.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::census::{census_capped, group_for_type, rigid_class_tuples, CensusResult, DEFAULT_GROUP_CAP};
use crate::coinv::coinvariant_dim;
use crate::error::{Error, Result};
use crate::matgrp::GroupTuple;
use crate::rigidity::{rigidity_verdict_with, RigidityOptions, RigidityReport};
use crate::rootdata::{cartan_det, rigid_tuples, ClassDimTable, RootSystem, DEFAULT_WORK_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "rigiditylab", version, about = "Rigidity criteria and triangle-group censuses over finite fields")]
pub struct Cli {
    /// Output format; `rootdata` defaults to csv, everything else to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the artifact here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Refuse computations whose work estimate exceeds this bound.
    #[arg(long, global = true, env = "RIGIDITYLAB_WORK_CAP", value_parser = clap::value_parser!(u64).range(1..))]
    pub work_cap: Option<u64>,
    /// Worker threads for the census.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of j_d for d = 1..d_max.
    Rootdata(RootArgs),
    /// Tuples (a_1..a_n) with Σ j_{a_i} = 2 dim G.
    RigidTuples(RigidTuplesArgs),
    /// Coinvariant dimension of a generator tuple.
    Coinv(TupleArgs),
    /// Full rigidity report for a generator tuple.
    Rigidity(RigidityArgs),
    /// Homomorphism census of a triangle group into a small linear group.
    Census(CensusArgs),
}

#[derive(Debug, Args)]
pub struct RootArgs {
    /// Cartan type letter, A to G
    #[arg(long = "type")]
    pub root_type: char,
    /// Rank of the root system
    #[arg(long)]
    pub rank: usize,
    /// Largest element order tabulated
    #[arg(long, default_value_t = 12)]
    pub d_max: u64,
    /// Characteristic; orders divisible by it are flagged.
    #[arg(long)]
    pub p: Option<u64>,
}

#[derive(Debug, Args)]
pub struct RigidTuplesArgs {
    /// Cartan type letter, A to G
    #[arg(long = "type")]
    pub root_type: char,
    /// Rank of the root system
    #[arg(long)]
    pub rank: usize,
    /// Tuple length.
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// Largest order a_i considered
    #[arg(long)]
    pub a_max: u64,
}

#[derive(Debug, Args)]
pub struct TupleArgs {
    /// Tuple document; `-` reads stdin.
    #[arg(long = "in")]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct RigidityArgs {
    #[command(flatten)]
    pub tuple: TupleArgs,
    /// Skip the irreducibility test and record it as asserted.
    #[arg(long)]
    pub assert_irreducible: bool,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    /// Cartan type letter; only A is available
    #[arg(long = "type", default_value_t = 'A')]
    pub root_type: char,
    /// The group is SL or PSL of degree rank + 1
    #[arg(long, default_value_t = 1)]
    pub rank: usize,
    /// Field size, a prime power
    #[arg(long)]
    pub q: u64,
    /// Comma-separated orders, e.g. 2,3,7.
    #[arg(long, value_delimiter = ',', required = true)]
    pub signature: Vec<u64>,
    /// Work modulo scalars (PSL rather than SL).
    #[arg(long)]
    pub projective: bool,
    /// Keep only class tuples meeting the dimension condition and attach rigidity reports.
    #[arg(long)]
    pub rigid: bool,
    /// Largest group to enumerate.
    #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
    pub group_cap: usize,
}

/// Resolved settings for one invocation.
#[derive(Debug)]
pub struct RunConfig {
    pub command: Command,
    pub work_cap: u64,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    pub parallelism: usize,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let format = cli.format.unwrap_or(match cli.command {
            Command::Rootdata(_) => Format::Csv,
            _ => Format::Json,
        });
        RunConfig {
            command: cli.command,
            work_cap: cli.work_cap.unwrap_or(DEFAULT_WORK_CAP),
            output_path: cli.out,
            format,
            parallelism: cli.workers as usize,
        }
    }
}

#[derive(Debug, Serialize)]
struct ErrorRecord<'a> {
    error: &'a str,
    message: String,
    exit_code: i32,
}

/// Parses arguments, runs, writes the artifact, and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.into()) {
        Ok(()) => 0,
        Err(e) => {
            let record = ErrorRecord {
                error: e.kind(),
                message: e.to_string(),
                exit_code: e.exit_code(),
            };
            eprintln!("{}", serde_json::to_string(&record).expect("error record serializes"));
            e.exit_code()
        }
    }
}

fn execute(config: RunConfig) -> Result<()> {
    let artifact = run(&config)?;
    match &config.output_path {
        Some(path) => std::fs::write(path, artifact).map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(artifact.as_bytes())
            .map_err(|e| Error::Io(e.to_string())),
    }
}

/// Runs the configured command and returns the artifact text.
pub fn run(config: &RunConfig) -> Result<String> {
    match &config.command {
        Command::Rootdata(a) => rootdata(a, config),
        Command::RigidTuples(a) => {
            let rs = RootSystem::parse(a.root_type, a.rank)?;
            let r = rigid_tuples(&rs, a.n, a.a_max, config.work_cap)?;
            match config.format {
                Format::Json => to_json(&r),
                Format::Csv => {
                    let rows = r.tuples.iter().map(|t| vec![rs.name(), join(t)]);
                    to_csv(&["root_system", "tuple"], rows)
                }
            }
        }
        Command::Coinv(a) => {
            let t = read_tuple(&a.input)?;
            let r = coinvariant_dim(&t)?;
            match config.format {
                Format::Json => to_json(&r),
                Format::Csv => to_csv(
                    &["span_dim", "coinv_dim"],
                    [vec![r.span_dim.to_string(), r.coinv_dim.to_string()]],
                ),
            }
        }
        Command::Rigidity(a) => {
            let t = read_tuple(&a.tuple.input)?;
            let opts = RigidityOptions {
                assert_irreducible: a.assert_irreducible,
            };
            let r = rigidity_verdict_with(&t, opts)?;
            match config.format {
                Format::Json => to_json(&r),
                Format::Csv => rigidity_csv(&r),
            }
        }
        Command::Census(a) => {
            let g = group_for_type(a.root_type, a.rank, a.q, a.projective, a.group_cap)?;
            let mut r = census_capped(&g, &a.signature, config.parallelism, config.work_cap)?;
            if a.rigid {
                let rs = RootSystem::parse(a.root_type, a.rank)?;
                r = rigid_class_tuples(&r, &rs)?;
            }
            match config.format {
                Format::Json => to_json(&r),
                Format::Csv => census_csv(&r),
            }
        }
    }
}

#[derive(Debug, Serialize)]
struct RootdataRow {
    d: u64,
    j_d: usize,
    witness: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    p_divides_d: Option<bool>,
}

#[derive(Debug, Serialize)]
struct RootdataDoc {
    root_system: String,
    rank: usize,
    dim: usize,
    num_positive_roots: usize,
    cartan: Vec<Vec<i64>>,
    cartan_det: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
    entries: Vec<RootdataRow>,
}

fn rootdata(a: &RootArgs, config: &RunConfig) -> Result<String> {
    let rs = RootSystem::parse(a.root_type, a.rank)?;
    if let Some(p) = a.p {
        if !crate::ff::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
    }
    let table = ClassDimTable::build(&rs, a.d_max, config.work_cap)?;
    let rows: Vec<RootdataRow> = table
        .entries
        .values()
        .map(|v| RootdataRow {
            d: v.d,
            j_d: v.j,
            witness: v.witness.clone(),
            p_divides_d: a.p.map(|p| v.d % p == 0),
        })
        .collect();
    match config.format {
        Format::Json => to_json(&RootdataDoc {
            root_system: rs.name(),
            rank: rs.rank(),
            dim: rs.dim(),
            num_positive_roots: rs.num_positive_roots(),
            cartan: rs.cartan().to_vec(),
            cartan_det: cartan_det(&rs),
            p: a.p,
            entries: rows,
        }),
        Format::Csv => {
            let mut header = vec!["type", "rank", "d", "j_d", "witness"];
            if a.p.is_some() {
                header.push("p_divides_d");
            }
            let letter = rs.root_type().letter().to_string();
            let lines = rows.iter().map(|r| {
                let mut line = vec![
                    letter.clone(),
                    rs.rank().to_string(),
                    r.d.to_string(),
                    r.j_d.to_string(),
                    join(&r.witness),
                ];
                if let Some(flag) = r.p_divides_d {
                    line.push(flag.to_string());
                }
                line
            });
            to_csv(&header, lines)
        }
    }
}

fn rigidity_csv(r: &RigidityReport) -> Result<String> {
    to_csv(
        &[
            "verdict",
            "class_dims",
            "sum_class_dims",
            "two_dim_g",
            "coinv_dim",
            "irreducible",
            "df_rank",
            "z1_dim",
            "b1_dim",
            "h1_dim",
            "h1_class_dim",
        ],
        [vec![
            r.verdict.to_string(),
            join(&r.class_dims),
            r.sum_class_dims.to_string(),
            r.two_dim_g.to_string(),
            r.coinv_dim.to_string(),
            serde_json::to_value(r.irreducible)
                .ok()
                .and_then(|v| v.as_str().map(str::to_owned))
                .unwrap_or_default(),
            r.df_rank.to_string(),
            r.cocycles.z1_dim.to_string(),
            r.cocycles.b1_dim.to_string(),
            r.cocycles.h1_dim.to_string(),
            r.cocycles.h1_class_dim.to_string(),
        ]],
    )
}

fn census_csv(r: &CensusResult) -> Result<String> {
    let rows = r.per_class_counts.iter().map(|c| {
        vec![
            r.group_id.clone(),
            join(&r.signature),
            c.labels.join(" "),
            c.hom_count.to_string(),
            c.epi_count.to_string(),
            c.class_dim_sum.to_string(),
            c.rigidity.as_ref().map(|x| x.verdict.to_string()).unwrap_or_default(),
        ]
    });
    to_csv(
        &["group", "signature", "classes", "hom_count", "epi_count", "class_dim_sum", "verdict"],
        rows,
    )
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Schema(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn to_csv<I>(header: &[&str], rows: I) -> Result<String>
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(&r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

fn read_tuple(path: &PathBuf) -> Result<GroupTuple> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Io(e.to_string()))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?
    };
    GroupTuple::from_json(&text)
}
