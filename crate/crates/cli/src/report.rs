use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;
use twocoset::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// One JSON object on stdout.
#[derive(Clone, Debug, Serialize)]
pub struct Suite {
    pub name: String,
    pub parameters: BTreeMap<String, Value>,
    pub status: Status,
    pub evidence: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed: Option<f64>,
}

impl Suite {
    pub fn new(name: impl Into<String>) -> Self {
        Suite {
            name: name.into(),
            parameters: BTreeMap::new(),
            status: Status::Pass,
            evidence: Value::Null,
            elapsed: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.parameters.insert(key.to_owned(), serde_json::to_value(value).expect("parameters serialize"));
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Runs `body`, recording its verdict, evidence and wall time.
    pub fn run(mut self, body: impl FnOnce() -> twocoset::Result<(bool, Value)>) -> Result<Suite, SuiteError> {
        let start = Instant::now();
        match body() {
            Ok((ok, evidence)) => {
                self.status = Status::from_bool(ok);
                self.evidence = evidence;
                self.elapsed = Some(start.elapsed().as_secs_f64());
                Ok(self)
            }
            Err(error) => Err(SuiteError { suite: self.name, error }),
        }
    }

    /// Drops every `elapsed` field, leaving a byte-stable report.
    pub fn strip_timings(&mut self) {
        self.elapsed = None;
        strip_key(&mut self.evidence, "elapsed");
    }

    pub fn summary(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        match self.elapsed {
            Some(t) => format!("{status} {} ({t:.2}s)", self.name),
            None => format!("{status} {}", self.name),
        }
    }
}

fn strip_key(v: &mut Value, key: &str) {
    match v {
        Value::Object(map) => {
            map.remove(key);
            map.values_mut().for_each(|x| strip_key(x, key));
        }
        Value::Array(items) => items.iter_mut().for_each(|x| strip_key(x, key)),
        _ => {}
    }
}

#[derive(Debug)]
pub struct SuiteError {
    pub suite: String,
    pub error: Error,
}

impl std::fmt::Display for SuiteError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.suite, self.error)
    }
}

/// 1 for a failed mathematical assertion, 2 for bad input, 3 for capacity.
pub fn exit_code(error: &Error) -> u8 {
    match error {
        Error::Usage(_) | Error::Parse(_) | Error::Precondition(_) => 2,
        Error::Capacity(_) => 3,
        Error::Classification(_) | Error::Inconsistency(_) => 1,
    }
}
