//! Deterministic MCR (Official International Mahjong) environment:
//! tiles, seeded walls, the fan-scoring subset with the 8-point rule, and a
//! four-player state machine with per-seat observations and legal-action
//! masks.
//!
//! Everything is a value; engine transitions are pure functions, so games
//! replay bit-identically from a seed plus the decision sequence, and any
//! number of games can run concurrently without coordination.

pub mod engine;
pub mod meld;
pub mod replay;
pub mod rng;
pub mod scoring;
pub mod tile;
pub mod wall;

pub use engine::{
    Action, ActionMask, ChowPos, EngineError, GameState, Observation, Outcome, Phase, Step,
    ACTION_COUNT, NUM_SEATS, OBS_FEATURES, OBS_LAYOUT_VERSION,
};
pub use meld::{enumerate_chows, Meld, MeldKind};
pub use scoring::{
    decompose, legal_win, pattern_signature, score, FanResult, Pattern, ScoreError, WinContext,
    WIN_THRESHOLD,
};
pub use tile::{Suit, Tile, TileCounts, Wind, TILE_KINDS, TOTAL_TILES};
pub use wall::{shuffle_wall, Wall};
