//! Line-delimited replay logs and their re-execution.
//!
//! Format: a header line `seed=<u64>`, then one line per recorded decision,
//! `seat=<0-3> action=<id>`. Only real decisions appear; seats whose only
//! claim option was Pass are resolved implicitly by the engine.

use std::fmt::Write as _;

use thiserror::Error;

use crate::engine::{Action, EngineError, GameState};

#[derive(Debug, Error)]
pub enum ReplayError {
    #[error("malformed replay line {line}: '{text}'")]
    Malformed { line: usize, text: String },
    #[error("missing seed header")]
    MissingHeader,
    #[error("decision {index} (seat {seat}, action {action}) rejected: {source}")]
    Diverged {
        index: usize,
        seat: u8,
        action: u8,
        source: EngineError,
    },
    #[error("log ended before the game finished")]
    Unfinished,
}

/// A recorded game: the seed and every real decision in engine order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayLog {
    pub seed: u64,
    pub decisions: Vec<(u8, Action)>,
}

impl ReplayLog {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "seed={}", self.seed).unwrap();
        for &(seat, action) in &self.decisions {
            writeln!(out, "seat={} action={}", seat, action.id()).unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<ReplayLog, ReplayError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or(ReplayError::MissingHeader)?;
        let seed = header
            .trim()
            .strip_prefix("seed=")
            .and_then(|s| s.parse().ok())
            .ok_or(ReplayError::MissingHeader)?;
        let mut decisions = Vec::new();
        for (i, line) in lines {
            let bad = || ReplayError::Malformed { line: i + 1, text: line.to_string() };
            let mut parts = line.split_whitespace();
            let seat = parts
                .next()
                .and_then(|p| p.strip_prefix("seat="))
                .and_then(|p| p.parse::<u8>().ok())
                .ok_or_else(bad)?;
            let action = parts
                .next()
                .and_then(|p| p.strip_prefix("action="))
                .and_then(|p| p.parse::<u8>().ok())
                .and_then(Action::from_id)
                .ok_or_else(bad)?;
            if parts.next().is_some() {
                return Err(bad());
            }
            decisions.push((seat, action));
        }
        Ok(ReplayLog { seed, decisions })
    }

    /// Re-executes the log from `reset(seed)`. An action the engine rejects
    /// is a hard divergence (version or data drift), never repaired.
    pub fn execute(&self) -> Result<GameState, ReplayError> {
        let mut state = GameState::reset(self.seed);
        for (index, &(seat, action)) in self.decisions.iter().enumerate() {
            let step = state
                .step(seat, action)
                .map_err(|source| ReplayError::Diverged {
                    index,
                    seat,
                    action: action.id(),
                    source,
                })?;
            state = step.state;
        }
        if !state.is_finished() {
            return Err(ReplayError::Unfinished);
        }
        Ok(state)
    }
}
