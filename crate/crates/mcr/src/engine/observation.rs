//! Per-seat observations and their frozen feature encoding.
//!
//! An observation carries only information visible to the seat: its own
//! concealed hand, everyone's melds and discards, the last discard, seat
//! winds, the wall count, and the seat's legal-action mask. The numeric
//! layout is frozen (see [`OBS_LAYOUT_VERSION`]); demonstrations encoded by
//! one build replay bit-identically on another.
//!
//! Feature layout, `f64` values, seats indexed relative to the observer
//! (0 = self, 1 = next clockwise, 2 = across, 3 = previous):
//!
//! ```text
//! [  0, 34)  own concealed hand counts / 4
//! [ 34,170)  meld tile counts, 4 seats x 34 kinds / 4
//! [170,306)  discard counts, 4 seats x 34 kinds / 4
//! [306,442)  discard sequences, 4 seats x 34 slots, (kind id + 1) / 35
//! [442,476)  last discard one-hot over kinds
//! [476,480)  last discard seat one-hot (relative)
//! [480,496)  seat winds, 4 seats x 4 winds one-hot
//! [496]      wall remaining / 83
//! [497]      1.0 in the discard phase
//! [498]      1.0 in the claim phase
//! ```

use super::action::ActionMask;
use super::{GameState, Phase, NUM_SEATS};
use crate::meld::Meld;
use crate::tile::{Tile, TileCounts, Wind, TILE_KINDS};

/// Length of the feature vector.
pub const OBS_FEATURES: usize = 499;

/// Version tag of the observation layout, embedded in checkpoints.
pub const OBS_LAYOUT_VERSION: &str = "mcr-obs/1:f499:a41";

const DISCARD_SLOTS: usize = 34;

/// What one seat can see, plus its legal-action mask (empty when the seat
/// has no pending decision).
#[derive(Debug, Clone, PartialEq)]
pub struct Observation {
    pub seat: u8,
    pub hand: TileCounts,
    pub own_melds: Vec<Meld>,
    /// Meld tile counts by relative seat.
    pub meld_counts: [[u8; TILE_KINDS]; NUM_SEATS],
    /// Discards in order, by relative seat.
    pub discards: [Vec<Tile>; NUM_SEATS],
    /// Last discard and its relative seat, while one is claimable.
    pub last_discard: Option<(Tile, u8)>,
    pub seat_wind: Wind,
    pub wall_remaining: u8,
    pub in_claim_phase: bool,
    pub legal: ActionMask,
}

pub(super) fn observe(state: &GameState, seat: u8) -> Observation {
    let view = state.view();
    let rel = |abs: u8| -> usize { ((abs + NUM_SEATS as u8 - seat) % NUM_SEATS as u8) as usize };

    let mut meld_counts = [[0u8; TILE_KINDS]; NUM_SEATS];
    let mut discards: [Vec<Tile>; NUM_SEATS] = Default::default();
    for abs in 0..NUM_SEATS as u8 {
        let r = rel(abs);
        for m in &view.melds[abs as usize] {
            for t in m.tiles() {
                meld_counts[r][t.id() as usize] += 1;
            }
        }
        discards[r] = view.discards[abs as usize].clone();
    }

    Observation {
        seat,
        hand: view.hands[seat as usize].clone(),
        own_melds: view.melds[seat as usize].clone(),
        meld_counts,
        discards,
        last_discard: view.last_discard.map(|(t, s)| (t, rel(s) as u8)),
        seat_wind: state.seat_wind(seat),
        wall_remaining: view.wall_remaining as u8,
        in_claim_phase: view.phase == Phase::AwaitClaims,
        legal: state.legal_actions(seat).unwrap_or_default(),
    }
}

impl Observation {
    /// Encodes the observation into the frozen feature layout.
    pub fn features(&self) -> Vec<f64> {
        let mut f = vec![0.0; OBS_FEATURES];
        for (i, &c) in self.hand.raw().iter().enumerate() {
            f[i] = c as f64 / 4.0;
        }
        for s in 0..NUM_SEATS {
            let base = 34 + s * TILE_KINDS;
            for (i, &c) in self.meld_counts[s].iter().enumerate() {
                f[base + i] = c as f64 / 4.0;
            }
        }
        for s in 0..NUM_SEATS {
            let count_base = 170 + s * TILE_KINDS;
            let seq_base = 306 + s * DISCARD_SLOTS;
            debug_assert!(self.discards[s].len() <= DISCARD_SLOTS);
            for (k, t) in self.discards[s].iter().enumerate() {
                f[count_base + t.id() as usize] += 0.25;
                if k < DISCARD_SLOTS {
                    f[seq_base + k] = (t.id() as f64 + 1.0) / 35.0;
                }
            }
        }
        if let Some((t, s)) = self.last_discard {
            f[442 + t.id() as usize] = 1.0;
            f[476 + s as usize] = 1.0;
        }
        for s in 0..NUM_SEATS {
            let wind = (self.seat_wind.index() + s) % NUM_SEATS;
            f[480 + s * 4 + wind] = 1.0;
        }
        f[496] = self.wall_remaining as f64 / 83.0;
        if self.in_claim_phase {
            f[498] = 1.0;
        } else {
            f[497] = 1.0;
        }
        f
    }

    /// Little-endian bytes of the feature vector, for bit-level determinism
    /// checks.
    pub fn feature_bytes(&self) -> Vec<u8> {
        self.features()
            .iter()
            .flat_map(|v| v.to_le_bytes())
            .collect()
    }
}
