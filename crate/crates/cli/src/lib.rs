//   Copyright 2026 plvo developers
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.


//! Command-line front end: JSON instance files in, JSON reports out.

pub mod commands;
pub mod format;

use std::fmt;

pub use commands::{Cli, Command};

/// Why a command stopped, mapped onto the process exit code.
#[derive(Debug)]
pub enum Failure {
    Io(String),
    Parse(String),
    Invalid(String),
    Core(plvo_core::Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Io(_) | Failure::Parse(_) => 1,
            Failure::Core(plvo_core::Error::NotConeConvex) => 3,
            Failure::Invalid(_) | Failure::Core(_) => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Io(m) => write!(f, "io error: {m}"),
            Failure::Parse(m) => write!(f, "parse error: {m}"),
            Failure::Invalid(m) => write!(f, "invalid instance: {m}"),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for Failure {}

impl From<plvo_core::Error> for Failure {
    fn from(e: plvo_core::Error) -> Self {
        Failure::Core(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Parse(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    let v = serde_json::to_value(value)?;
    let mut s = serde_json::to_string_pretty(&v)?;
    s.push('\n');
    Ok(s)
}
