//! The fixed discrete action enumeration and legal-action masks.
//!
//! The enumeration order is frozen:
//!
//! ```text
//!  0..34  Discard(kind)    discard one tile of the given canonical kind
//! 34      Chow(Low)        claimed tile is the lowest tile of the run
//! 35      Chow(Mid)        claimed tile is the middle tile of the run
//! 36      Chow(High)       claimed tile is the highest tile of the run
//! 37      Pung
//! 38      Kong             claim kong, or declare concealed/promoted kong
//! 39      Win
//! 40      Pass
//! ```
//!
//! 41 actions in total.

use crate::tile::{Tile, TILE_KINDS};

/// Size of the action space.
pub const ACTION_COUNT: usize = 41;

/// Position of the claimed tile within a Chow run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChowPos {
    Low,
    Mid,
    High,
}

impl ChowPos {
    /// Offset from the claimed tile to the run's base (lowest) tile.
    pub const fn base_offset(self) -> i8 {
        match self {
            ChowPos::Low => 0,
            ChowPos::Mid => -1,
            ChowPos::High => -2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Action {
    Discard(Tile),
    Chow(ChowPos),
    Pung,
    Kong,
    Win,
    Pass,
}

impl Action {
    pub fn id(self) -> u8 {
        match self {
            Action::Discard(t) => t.id(),
            Action::Chow(ChowPos::Low) => 34,
            Action::Chow(ChowPos::Mid) => 35,
            Action::Chow(ChowPos::High) => 36,
            Action::Pung => 37,
            Action::Kong => 38,
            Action::Win => 39,
            Action::Pass => 40,
        }
    }

    pub fn from_id(id: u8) -> Option<Action> {
        match id {
            0..=33 => Some(Action::Discard(Tile::from_id(id).ok()?)),
            34 => Some(Action::Chow(ChowPos::Low)),
            35 => Some(Action::Chow(ChowPos::Mid)),
            36 => Some(Action::Chow(ChowPos::High)),
            37 => Some(Action::Pung),
            38 => Some(Action::Kong),
            39 => Some(Action::Win),
            40 => Some(Action::Pass),
            _ => None,
        }
    }
}

/// Boolean vector over the action space, packed into a single word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ActionMask(u64);

impl ActionMask {
    pub fn empty() -> ActionMask {
        ActionMask(0)
    }

    pub fn set(&mut self, action: Action) {
        self.0 |= 1 << action.id();
    }

    pub fn set_id(&mut self, id: u8) {
        debug_assert!((id as usize) < ACTION_COUNT);
        self.0 |= 1 << id;
    }

    pub fn allows(&self, action: Action) -> bool {
        self.allows_id(action.id())
    }

    pub fn allows_id(&self, id: u8) -> bool {
        (id as usize) < ACTION_COUNT && self.0 & (1 << id) != 0
    }

    pub fn count(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    /// Legal action ids, ascending.
    pub fn iter_ids(&self) -> impl Iterator<Item = u8> + '_ {
        (0..ACTION_COUNT as u8).filter(move |&i| self.allows_id(i))
    }

    /// Lowest legal action, if any.
    pub fn first(&self) -> Option<Action> {
        self.iter_ids().next().and_then(Action::from_id)
    }

    /// Legal discard kinds only.
    pub fn discards(&self) -> impl Iterator<Item = Tile> + '_ {
        (0..TILE_KINDS as u8)
            .filter(move |&i| self.allows_id(i))
            .map(|i| Tile::from_id(i).unwrap())
    }

    pub fn as_bool_vec(&self) -> Vec<bool> {
        (0..ACTION_COUNT as u8).map(|i| self.allows_id(i)).collect()
    }

    pub fn bits(&self) -> u64 {
        self.0
    }
}
