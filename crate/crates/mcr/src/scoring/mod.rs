//! Fan scoring: decompose 14-tile hands into winning shapes, match the
//! implemented pattern subset, and enforce the 8-point minimum.

mod decompose;
mod patterns;

pub use decompose::{decompose, SpecialShape, WinningDecomposition};
pub use patterns::{major_patterns, Pattern, ALL_PATTERNS, EXCLUSIONS};

use thiserror::Error;

use crate::meld::Meld;
use crate::tile::TileCounts;

/// A win must score at least this many points.
pub const WIN_THRESHOLD: u32 = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScoreError {
    #[error("hand is not a winning shape")]
    NotWinning,
}

/// Circumstances of the win that affect scoring.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct WinContext {
    /// The winning tile was drawn by the winner (not claimed from a discard).
    pub self_drawn: bool,
    /// The wall was empty at the moment of the win.
    pub last_wall_tile: bool,
}

/// Matched patterns and their point total for the best reading of a hand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanResult {
    /// Matched patterns with per-instance points. A pattern may repeat
    /// (e.g. one entry per dragon Pung).
    pub matched: Vec<(Pattern, u32)>,
    /// Sum of the matched points after exclusion rules.
    pub total: u32,
}

impl FanResult {
    fn from_matched(matched: Vec<(Pattern, u32)>) -> FanResult {
        let total = matched.iter().map(|&(_, p)| p).sum();
        FanResult { matched, total }
    }
}

/// Scores a hand: the maximum point total over all winning decompositions.
///
/// `hand14` holds the concealed tiles including the winning tile; `exposed`
/// the table melds. Fails only when the hand is not a winning shape at all;
/// a shape that matches no pattern scores 0 (and therefore cannot win).
pub fn score(
    hand14: &TileCounts,
    exposed: &[Meld],
    ctx: WinContext,
) -> Result<FanResult, ScoreError> {
    let decomps = decompose(hand14, exposed);
    if decomps.is_empty() {
        return Err(ScoreError::NotWinning);
    }
    let mut best: Option<FanResult> = None;
    for d in &decomps {
        let matched = patterns::match_patterns(d, hand14, exposed, &ctx);
        let result = FanResult::from_matched(matched);
        if best.as_ref().map_or(true, |b| result.total > b.total) {
            best = Some(result);
        }
    }
    Ok(best.expect("nonempty decompositions"))
}

/// Scores the hand and applies the 8-point rule: `Some` exactly when the
/// hand is a winning shape worth at least [`WIN_THRESHOLD`].
pub fn legal_win(hand14: &TileCounts, exposed: &[Meld], ctx: WinContext) -> Option<FanResult> {
    match score(hand14, exposed, ctx) {
        Ok(r) if r.total >= WIN_THRESHOLD => Some(r),
        _ => None,
    }
}

/// The distinct patterns a win exhibited, in canonical order. This is the
/// per-win event record consumed by the game-level style metric.
pub fn pattern_signature(result: &FanResult) -> Vec<Pattern> {
    let mut sig: Vec<Pattern> = result.matched.iter().map(|&(p, _)| p).collect();
    sig.sort();
    sig.dedup();
    sig
}

/// The single highest-valued pattern of a win, used by the optional
/// principal-pattern mode of the style metrics.
pub fn principal_pattern(result: &FanResult) -> Option<Pattern> {
    result
        .matched
        .iter()
        .map(|&(p, _)| p)
        .max_by_key(|p| (p.points(), std::cmp::Reverse(*p)))
}
