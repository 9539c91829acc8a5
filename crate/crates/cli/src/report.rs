use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use sha2::{Digest, Sha256};

/// Exit statuses shared with harnesses.
pub mod exit {
    pub const OK: u8 = 0;
    pub const INPUT: u8 = 2;
    pub const NO_CONVERGENCE: u8 = 3;
    pub const BUDGET: u8 = 4;
    pub const NO_EQUILIBRIUM: u8 = 5;
    pub const MISMATCH: u8 = 6;
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub msg: String,
}

impl Failure {
    pub fn input(msg: impl Into<String>) -> Self {
        Failure {
            code: exit::INPUT,
            msg: msg.into(),
        }
    }
}

impl From<anticoord::Error> for Failure {
    fn from(e: anticoord::Error) -> Self {
        use anticoord::Error::*;
        let code = match e {
            BudgetExceeded { .. } | TooLarge { .. } | TooManyVariables { .. } => exit::BUDGET,
            NoEquilibrium => exit::NO_EQUILIBRIUM,
            _ => exit::INPUT,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

pub type CmdResult<T> = Result<T, Failure>;

/// Plain-text run report ending in a single `RESULT` line.
#[derive(Debug, Default)]
pub struct Report {
    body: String,
    result: Vec<(String, String)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Report::default();
        r.line(format!("command: {command}"));
        r
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.body.push_str(s.as_ref());
        self.body.push('\n');
    }

    pub fn field(&mut self, key: &str, value: impl std::fmt::Display) {
        writeln!(self.body, "{key}: {value}").unwrap();
    }

    pub fn result(&mut self, key: &str, value: impl std::fmt::Display) {
        self.result.push((key.to_string(), value.to_string()));
    }

    /// Reads an input file, recording its digest.
    pub fn read_input(&mut self, path: &Path) -> CmdResult<String> {
        let bytes = fs::read(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
        let digest = hex::encode(Sha256::digest(&bytes));
        self.line(format!("input: {} sha256={digest}", path.display()));
        String::from_utf8(bytes).map_err(|_| Failure::input(format!("{}: not UTF-8", path.display())))
    }

    pub fn write_output(&mut self, path: &Path, contents: &str) -> CmdResult<()> {
        fs::write(path, contents).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
        self.line(format!("wrote: {}", path.display()));
        Ok(())
    }

    pub fn finish(mut self, status: &str) -> String {
        let mut last = format!("RESULT status={status}");
        for (k, v) in &self.result {
            write!(last, " {k}={v}").unwrap();
        }
        self.line(last);
        self.body
    }
}
