use std::fmt;
use std::io::Write;

use gfl_core::{Error, PrimeField, Verdict};
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: u32 = 1;

/// Options shared by every subcommand, after validation.
#[derive(Clone, Debug)]
pub struct Context {
    pub primes: Vec<u64>,
    pub seed: u64,
    pub trials: usize,
    pub dmax: Option<u32>,
}

impl Context {
    pub fn first_prime(&self) -> u64 {
        self.primes[0]
    }

    pub fn field(&self) -> Result<PrimeField, CliError> {
        Ok(PrimeField::new(self.first_prime())?)
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Core(e) => match e {
                Error::Overflow(_) | Error::LexMinimalityBreach { .. } | Error::ApolarityMismatch { .. } | Error::Invariant(_) => 3,
                _ => 2,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) => f.write_str(s),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

pub fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

#[derive(Clone, Debug, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push<I, T>(&mut self, row: I)
    where
        I: IntoIterator<Item = T>,
        T: ToString,
    {
        self.rows.push(row.into_iter().map(|c| c.to_string()).collect());
    }

    /// One `key,value` row per top-level field of `data`.
    pub fn from_fields(data: &Value) -> Self {
        let mut t = Table::new(&["key", "value"]);
        if let Value::Object(map) = data {
            for (k, v) in map {
                let v = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                t.push([k.clone(), v]);
            }
        }
        t
    }
}

pub struct Outcome {
    pub command: &'static str,
    pub params: Value,
    pub verdict: Verdict,
    pub data: Value,
    pub table: Option<Table>,
}

impl Outcome {
    pub fn new<P: Serialize, D: Serialize>(command: &'static str, params: &P, verdict: Verdict, data: &D) -> Result<Self, CliError> {
        let params = serde_json::to_value(params).map_err(|e| Error::Invariant(e.to_string()))?;
        let data = serde_json::to_value(data).map_err(|e| Error::Invariant(e.to_string()))?;
        Ok(Outcome { command, params, verdict, data, table: None })
    }

    pub fn with_table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema: u32,
    command: &'a str,
    params: &'a Value,
    primes: &'a [u64],
    seed: u64,
    trials: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    dmax: Option<u32>,
    verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    data: &'a Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_ms: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub fn write_outcome(out: &mut impl Write, ctx: &Context, outcome: &Outcome, format: Format, wall_time_ms: Option<u64>) -> Result<(), CliError> {
    match format {
        Format::Json => {
            let env = Envelope {
                schema: SCHEMA,
                command: outcome.command,
                params: &outcome.params,
                primes: &ctx.primes,
                seed: ctx.seed,
                trials: ctx.trials,
                dmax: ctx.dmax,
                verdict: outcome.verdict,
                error: None,
                data: &outcome.data,
                wall_time_ms,
            };
            serde_json::to_writer_pretty(&mut *out, &env).map_err(|e| Error::Invariant(e.to_string()))?;
            writeln!(out)?;
        }
        Format::Csv => {
            let table = outcome.table.clone().unwrap_or_else(|| Table::from_fields(&outcome.data));
            let mut w = csv::Writer::from_writer(&mut *out);
            let csv_err = |e: csv::Error| CliError::Io(std::io::Error::other(e));
            w.write_record(&table.columns).map_err(csv_err)?;
            for row in &table.rows {
                w.write_record(row).map_err(csv_err)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// JSON document for a run that stopped on an internal error.
pub fn write_error(out: &mut impl Write, ctx: &Context, command: &str, err: &CliError) -> Result<(), CliError> {
    let env = Envelope {
        schema: SCHEMA,
        command,
        params: &Value::Null,
        primes: &ctx.primes,
        seed: ctx.seed,
        trials: ctx.trials,
        dmax: ctx.dmax,
        verdict: Verdict::Error,
        error: Some(err.to_string()),
        data: &Value::Null,
        wall_time_ms: None,
    };
    serde_json::to_writer_pretty(&mut *out, &env).map_err(|e| Error::Invariant(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}
