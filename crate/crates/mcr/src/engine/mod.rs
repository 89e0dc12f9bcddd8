//! The four-player MCR state machine: deal, draw/discard turns, claim
//! resolution, terminal detection, and settlement.
//!
//! States are plain values and every transition is a pure function of
//! (state, seat, action); all randomness lives in the wall order fixed by
//! the game seed. Claims are collected as simultaneous votes from the seats
//! that actually have a claim available and are then resolved by priority
//! (Win over Pung/Kong over Chow, with simultaneous Wins going to the seat
//! nearest clockwise from the discarder). Seats whose only option is Pass
//! are never polled, so recorded decisions are real choices.
//!
//! Settlement: a self-drawn win collects `8 + fan` from each loser; a win
//! off a discard collects `8 + fan` from the discarder and 8 from each of
//! the other two seats. Rewards are those point totals scaled by 1/32.
//! These conventions (and the nearest-seat tie break) are engine policy
//! taken from the rulebook, and a game is a draw once the wall is empty.

mod action;
mod observation;

pub use action::{Action, ActionMask, ChowPos, ACTION_COUNT};
pub use observation::{Observation, OBS_FEATURES, OBS_LAYOUT_VERSION};

use thiserror::Error;

use crate::meld::{enumerate_chows, Meld, MeldKind};
use crate::scoring::{legal_win, FanResult, WinContext};
use crate::tile::{Tile, TileCounts, Wind, TOTAL_TILES};
use crate::wall::{shuffle_wall, Wall};

pub const NUM_SEATS: usize = 4;

/// Points-to-reward scale: rewards are settlement points / 32.
pub const REWARD_SCALE: f64 = 1.0 / 32.0;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("game is finished")]
    Finished,
    #[error("seat {0} is not a valid seat index")]
    BadSeat(u8),
    #[error("seat {0} has no pending decision")]
    NoPendingDecision(u8),
    #[error("illegal action {action:?} for seat {seat}: {reason}")]
    IllegalAction {
        seat: u8,
        action: Action,
        reason: &'static str,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    AwaitDiscard,
    AwaitClaims,
    Finished,
}

/// Terminal result: winner (if any), their fan breakdown, raw settlement
/// points, and scaled rewards. Rewards always sum to zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub winner: Option<u8>,
    pub fan: Option<FanResult>,
    pub raw_points: [i32; NUM_SEATS],
    pub rewards: [f64; NUM_SEATS],
}

/// Result of applying one action.
#[derive(Debug, Clone)]
pub struct Step {
    pub state: GameState,
    pub terminal: bool,
    pub rewards: [f64; NUM_SEATS],
}

/// Full table state. Seat 0 is the dealer and holds the East wind; the
/// prevalent wind is East (single-hand games, no rotation).
#[derive(Debug, Clone, PartialEq)]
pub struct GameState {
    seed: u64,
    wall: Wall,
    hands: [TileCounts; NUM_SEATS],
    melds: [Vec<Meld>; NUM_SEATS],
    discards: [Vec<Tile>; NUM_SEATS],
    turn: u8,
    phase: Phase,
    last_discard: Option<(Tile, u8)>,
    /// Claim seats still to vote, clockwise from the discarder.
    pending: Vec<u8>,
    votes: [Option<Action>; NUM_SEATS],
    outcome: Option<Outcome>,
}

impl GameState {
    /// Deals a fresh game: wall shuffled from `seed`, 13 tiles to each seat
    /// one at a time starting with the dealer, then the dealer's 14th draw.
    pub fn reset(seed: u64) -> GameState {
        let mut wall = shuffle_wall(seed);
        let mut hands: [TileCounts; NUM_SEATS] = Default::default();
        for _ in 0..13 {
            for hand in hands.iter_mut() {
                hand.add(wall.draw_front().expect("fresh wall"));
            }
        }
        hands[0].add(wall.draw_front().expect("fresh wall"));
        GameState {
            seed,
            wall,
            hands,
            melds: Default::default(),
            discards: Default::default(),
            turn: 0,
            phase: Phase::AwaitDiscard,
            last_discard: None,
            pending: Vec::new(),
            votes: [None; NUM_SEATS],
            outcome: None,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn is_finished(&self) -> bool {
        self.phase == Phase::Finished
    }

    /// Acting seat in the discard phase.
    pub fn turn(&self) -> u8 {
        self.turn
    }

    pub fn hand(&self, seat: u8) -> &TileCounts {
        &self.hands[seat as usize]
    }

    pub fn melds(&self, seat: u8) -> &[Meld] {
        &self.melds[seat as usize]
    }

    pub fn discards(&self, seat: u8) -> &[Tile] {
        &self.discards[seat as usize]
    }

    pub fn wall_remaining(&self) -> usize {
        self.wall.remaining()
    }

    /// Total wall draws so far; non-decreasing along any play path.
    pub fn draws_made(&self) -> usize {
        self.wall.draws_made()
    }

    pub fn last_discard(&self) -> Option<(Tile, u8)> {
        self.last_discard
    }

    pub fn seat_wind(&self, seat: u8) -> Wind {
        Wind::ALL[seat as usize]
    }

    pub fn outcome(&self) -> Option<&Outcome> {
        self.outcome.as_ref()
    }

    /// The next seat that must make a real decision, with its legal mask.
    /// `None` once the game is finished.
    pub fn current_decision(&self) -> Option<(u8, ActionMask)> {
        match self.phase {
            Phase::Finished => None,
            Phase::AwaitDiscard => {
                let mask = self.legal_actions(self.turn).expect("actor has decision");
                Some((self.turn, mask))
            }
            Phase::AwaitClaims => {
                let seat = *self.pending.first().expect("claim phase has pending seats");
                let mask = self.legal_actions(seat).expect("pending seat has decision");
                Some((seat, mask))
            }
        }
    }

    /// Legal-action mask for `seat`. In the claim phase every non-discarding
    /// seat that has not voted may be queried (a seat with nothing to claim
    /// gets a Pass-only mask); other seats have no pending decision.
    pub fn legal_actions(&self, seat: u8) -> Result<ActionMask, EngineError> {
        if seat as usize >= NUM_SEATS {
            return Err(EngineError::BadSeat(seat));
        }
        match self.phase {
            Phase::Finished => Err(EngineError::Finished),
            Phase::AwaitDiscard => {
                if seat != self.turn {
                    return Err(EngineError::NoPendingDecision(seat));
                }
                let hand = &self.hands[seat as usize];
                let mut mask = ActionMask::empty();
                for t in hand.iter_kinds() {
                    mask.set(Action::Discard(t));
                }
                if !self.kong_targets(seat).is_empty() && self.wall.remaining() >= 1 {
                    mask.set(Action::Kong);
                }
                let ctx = WinContext {
                    self_drawn: true,
                    last_wall_tile: self.wall.remaining() == 0,
                };
                if legal_win(hand, &self.melds[seat as usize], ctx).is_some() {
                    mask.set(Action::Win);
                }
                Ok(mask)
            }
            Phase::AwaitClaims => {
                let (tile, discarder) = self.last_discard.expect("claim phase has a discard");
                if seat == discarder || self.votes[seat as usize].is_some() {
                    return Err(EngineError::NoPendingDecision(seat));
                }
                Ok(self.claim_mask(seat, tile, discarder))
            }
        }
    }

    fn claim_mask(&self, seat: u8, tile: Tile, discarder: u8) -> ActionMask {
        let hand = &self.hands[seat as usize];
        let mut mask = ActionMask::empty();
        mask.set(Action::Pass);
        if hand.count(tile) >= 2 {
            mask.set(Action::Pung);
        }
        if hand.count(tile) >= 3 && self.wall.remaining() >= 1 {
            mask.set(Action::Kong);
        }
        if seat == next_seat(discarder) {
            for chow in enumerate_chows(hand, tile) {
                let pos = match tile.rank() - chow.base().rank() {
                    0 => ChowPos::Low,
                    1 => ChowPos::Mid,
                    _ => ChowPos::High,
                };
                mask.set(Action::Chow(pos));
            }
        }
        let mut with_claim = hand.clone();
        with_claim.add(tile);
        let ctx = WinContext {
            self_drawn: false,
            last_wall_tile: self.wall.remaining() == 0,
        };
        if legal_win(&with_claim, &self.melds[seat as usize], ctx).is_some() {
            mask.set(Action::Win);
        }
        mask
    }

    /// Kong declarations available to the acting seat: concealed quads
    /// first, then Pungs promotable with a held fourth tile, each in
    /// canonical tile order. The Kong action resolves to the first target.
    fn kong_targets(&self, seat: u8) -> Vec<(Tile, bool)> {
        let hand = &self.hands[seat as usize];
        let mut targets = Vec::new();
        for t in hand.iter_kinds() {
            if hand.count(t) == 4 {
                targets.push((t, true));
            }
        }
        for m in &self.melds[seat as usize] {
            if m.kind() == MeldKind::Pung && hand.contains(m.base()) {
                targets.push((m.base(), false));
            }
        }
        targets
    }

    /// Applies an action for `seat`, returning the successor state. Illegal
    /// actions are rejected, never silently ignored.
    pub fn step(&self, seat: u8, action: Action) -> Result<Step, EngineError> {
        let mask = self.legal_actions(seat)?;
        if !mask.allows(action) {
            return Err(EngineError::IllegalAction {
                seat,
                action,
                reason: "not in the legal-action mask for this state",
            });
        }
        let mut next = self.clone();
        match self.phase {
            Phase::AwaitDiscard => match action {
                Action::Discard(tile) => next.apply_discard(seat, tile),
                Action::Kong => next.apply_kong_declaration(seat),
                Action::Win => next.apply_self_drawn_win(seat),
                _ => unreachable!("mask admits only discard-phase actions"),
            },
            Phase::AwaitClaims => next.apply_claim_vote(seat, action),
            Phase::Finished => unreachable!("legal_actions rejects finished games"),
        }
        debug_assert_eq!(next.check_invariants(), Ok(()));
        let terminal = next.phase == Phase::Finished;
        let rewards = next
            .outcome
            .as_ref()
            .map_or([0.0; NUM_SEATS], |o| o.rewards);
        Ok(Step { state: next, terminal, rewards })
    }

    fn apply_discard(&mut self, seat: u8, tile: Tile) {
        assert!(self.hands[seat as usize].remove(tile));
        self.discards[seat as usize].push(tile);
        self.last_discard = Some((tile, seat));
        self.votes = [None; NUM_SEATS];
        self.pending.clear();
        for i in 1..NUM_SEATS as u8 {
            let s = (seat + i) % NUM_SEATS as u8;
            if self.claim_mask(s, tile, seat).count() > 1 {
                self.pending.push(s);
            }
        }
        if self.pending.is_empty() {
            self.resolve_claims();
        } else {
            self.phase = Phase::AwaitClaims;
        }
    }

    fn apply_kong_declaration(&mut self, seat: u8) {
        let (tile, concealed) = self.kong_targets(seat)[0];
        let hand = &mut self.hands[seat as usize];
        if concealed {
            assert!(hand.remove_n(tile, 4));
            self.melds[seat as usize].push(Meld::concealed_kong(tile));
        } else {
            assert!(hand.remove(tile));
            let meld = self.melds[seat as usize]
                .iter_mut()
                .find(|m| m.kind() == MeldKind::Pung && m.base() == tile)
                .expect("promotable pung");
            *meld = Meld::exposed_kong(tile, meld.claimed_from());
        }
        let replacement = self.wall.draw_back().expect("kong requires a live wall");
        self.hands[seat as usize].add(replacement);
        // Same seat discards (or wins) from the replacement draw.
    }

    fn apply_self_drawn_win(&mut self, seat: u8) {
        let ctx = WinContext {
            self_drawn: true,
            last_wall_tile: self.wall.remaining() == 0,
        };
        let fan = legal_win(&self.hands[seat as usize], &self.melds[seat as usize], ctx)
            .expect("win was legal");
        let unit = 8 + fan.total as i32;
        let mut raw = [-unit; NUM_SEATS];
        raw[seat as usize] = 3 * unit;
        self.finish(Some(seat), Some(fan), raw);
    }

    fn apply_claim_vote(&mut self, seat: u8, action: Action) {
        self.votes[seat as usize] = Some(action);
        self.pending.retain(|&s| s != seat);
        if self.pending.is_empty() {
            self.resolve_claims();
        }
    }

    fn resolve_claims(&mut self) {
        let (tile, discarder) = self.last_discard.expect("resolving a discard");
        let claimants: Vec<u8> = (1..NUM_SEATS as u8)
            .map(|i| (discarder + i) % NUM_SEATS as u8)
            .collect();

        // Win beats everything; nearest seat clockwise takes precedence.
        for &s in &claimants {
            if self.votes[s as usize] == Some(Action::Win) {
                self.apply_discard_win(s, tile, discarder);
                return;
            }
        }
        for &s in &claimants {
            match self.votes[s as usize] {
                Some(Action::Kong) => {
                    self.take_discard(discarder);
                    assert!(self.hands[s as usize].remove_n(tile, 3));
                    self.melds[s as usize].push(Meld::exposed_kong(tile, Some(discarder)));
                    let replacement = self.wall.draw_back().expect("kong claim needs a tile");
                    self.hands[s as usize].add(replacement);
                    self.turn = s;
                    self.phase = Phase::AwaitDiscard;
                    return;
                }
                Some(Action::Pung) => {
                    self.take_discard(discarder);
                    assert!(self.hands[s as usize].remove_n(tile, 2));
                    self.melds[s as usize].push(Meld::pung(tile, Some(discarder)));
                    self.turn = s;
                    self.phase = Phase::AwaitDiscard;
                    return;
                }
                _ => {}
            }
        }
        for &s in &claimants {
            if let Some(Action::Chow(pos)) = self.votes[s as usize] {
                self.take_discard(discarder);
                let base = tile.offset(pos.base_offset()).expect("validated chow");
                for t in [base, base.offset(1).unwrap(), base.offset(2).unwrap()] {
                    if t != tile {
                        assert!(self.hands[s as usize].remove(t));
                    }
                }
                self.melds[s as usize].push(
                    Meld::chow(base, Some(discarder)).expect("validated chow"),
                );
                self.turn = s;
                self.phase = Phase::AwaitDiscard;
                return;
            }
        }

        // Nobody claimed: the next seat draws, or the game is a wall draw.
        let next = next_seat(discarder);
        match self.wall.draw_front() {
            Some(t) => {
                self.hands[next as usize].add(t);
                self.turn = next;
                self.phase = Phase::AwaitDiscard;
            }
            None => self.finish(None, None, [0; NUM_SEATS]),
        }
    }

    fn apply_discard_win(&mut self, winner: u8, tile: Tile, discarder: u8) {
        self.take_discard(discarder);
        self.hands[winner as usize].add(tile);
        let ctx = WinContext {
            self_drawn: false,
            last_wall_tile: self.wall.remaining() == 0,
        };
        let fan = legal_win(&self.hands[winner as usize], &self.melds[winner as usize], ctx)
            .expect("win claim was legal");
        let unit = 8 + fan.total as i32;
        let mut raw = [-8; NUM_SEATS];
        raw[discarder as usize] = -unit;
        raw[winner as usize] = unit + 16;
        self.finish(Some(winner), Some(fan), raw);
    }

    fn take_discard(&mut self, discarder: u8) {
        let taken = self.discards[discarder as usize].pop();
        debug_assert_eq!(taken.map(|t| (t, discarder)), self.last_discard);
        self.last_discard = None;
    }

    fn finish(&mut self, winner: Option<u8>, fan: Option<FanResult>, raw: [i32; NUM_SEATS]) {
        debug_assert_eq!(raw.iter().sum::<i32>(), 0);
        let rewards = raw.map(|p| p as f64 * REWARD_SCALE);
        self.outcome = Some(Outcome { winner, fan, raw_points: raw, rewards });
        self.phase = Phase::Finished;
    }

    /// Per-seat observation; see [`Observation`] for the frozen layout.
    pub fn observe(&self, seat: u8) -> Observation {
        observation::observe(self, seat)
    }

    /// Verifies tile conservation and hand-size equivalence. Cheap enough to
    /// run after every step in tests.
    pub fn check_invariants(&self) -> Result<(), String> {
        let mut all = self.wall.undrawn_counts();
        for s in 0..NUM_SEATS {
            all = all.merged(&self.hands[s]);
            for m in &self.melds[s] {
                for t in m.tiles() {
                    all.add(t);
                }
            }
            all = all.merged(&TileCounts::from_tiles(self.discards[s].iter().copied()));
        }
        if all.total() != TOTAL_TILES {
            return Err(format!("tile conservation broken: {} tiles", all.total()));
        }
        for t in Tile::all() {
            if all.count(t) != 4 {
                return Err(format!("tile {t} has {} copies", all.count(t)));
            }
        }
        for s in 0..NUM_SEATS {
            let equiv = self.hands[s].total() + 3 * self.melds[s].len();
            let winner = self.outcome.as_ref().and_then(|o| o.winner);
            let expect = match self.phase {
                Phase::AwaitDiscard if s as u8 == self.turn => 14,
                Phase::Finished if winner == Some(s as u8) => 14,
                _ => 13,
            };
            if equiv != expect {
                return Err(format!(
                    "seat {s} hand equivalence {equiv}, expected {expect} in {:?}",
                    self.phase
                ));
            }
        }
        Ok(())
    }

    /// Canonical byte serialization of the full state, used by determinism
    /// checks. Two states are identical iff their bytes are.
    pub fn state_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(512);
        out.extend_from_slice(&self.seed.to_le_bytes());
        out.push(match self.phase {
            Phase::AwaitDiscard => 0,
            Phase::AwaitClaims => 1,
            Phase::Finished => 2,
        });
        out.push(self.turn);
        out.extend_from_slice(&(self.wall.remaining() as u16).to_le_bytes());
        out.extend_from_slice(&(self.wall.draws_made() as u16).to_le_bytes());
        for t in self.wall.undrawn_counts().raw() {
            out.push(*t);
        }
        for s in 0..NUM_SEATS {
            out.extend_from_slice(self.hands[s].raw());
            out.push(self.melds[s].len() as u8);
            for m in &self.melds[s] {
                out.push(match m.kind() {
                    MeldKind::Chow => 0,
                    MeldKind::Pung => 1,
                    MeldKind::ExposedKong => 2,
                    MeldKind::ConcealedKong => 3,
                });
                out.push(m.base().id());
                out.push(m.claimed_from().map_or(0xFF, |c| c));
            }
            out.push(self.discards[s].len() as u8);
            for t in &self.discards[s] {
                out.push(t.id());
            }
        }
        match self.last_discard {
            Some((t, s)) => {
                out.push(1);
                out.push(t.id());
                out.push(s);
            }
            None => out.push(0),
        }
        for v in &self.votes {
            out.push(v.map_or(0xFF, |a| a.id()));
        }
        match &self.outcome {
            Some(o) => {
                out.push(1);
                out.push(o.winner.map_or(0xFF, |w| w));
                for p in o.raw_points {
                    out.extend_from_slice(&p.to_le_bytes());
                }
            }
            None => out.push(0),
        }
        out
    }
}

pub fn next_seat(seat: u8) -> u8 {
    (seat + 1) % NUM_SEATS as u8
}

// Used by Observation encoding, which needs field access.
pub(crate) struct StateView<'a> {
    pub hands: &'a [TileCounts; NUM_SEATS],
    pub melds: &'a [Vec<Meld>; NUM_SEATS],
    pub discards: &'a [Vec<Tile>; NUM_SEATS],
    pub last_discard: Option<(Tile, u8)>,
    pub phase: Phase,
    pub wall_remaining: usize,
}

impl GameState {
    pub(crate) fn view(&self) -> StateView<'_> {
        StateView {
            hands: &self.hands,
            melds: &self.melds,
            discards: &self.discards,
            last_discard: self.last_discard,
            phase: self.phase,
            wall_remaining: self.wall.remaining(),
        }
    }
}
