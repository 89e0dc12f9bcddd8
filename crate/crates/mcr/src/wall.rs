//! The 136-tile wall and its seeded shuffle.

use crate::rng::SplitMix64;
use crate::tile::{Tile, TileCounts, COPIES_PER_KIND, TOTAL_TILES};

/// An ordered wall of 136 tiles. Regular draws come off the front, Kong
/// replacement draws off the back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wall {
    tiles: Vec<Tile>,
    front: usize,
    back: usize,
}

/// Builds the wall for game seed `e`.
///
/// The starting order is the canonical multiset — four copies of each kind in
/// canonical id order — permuted by one Fisher–Yates pass of
/// [`SplitMix64::shuffle`] seeded directly with `e`. Both the generator and
/// the shuffle procedure are pinned in [`crate::rng`], so the permutation is
/// a pure function of the seed and reproducible across builds.
pub fn shuffle_wall(seed: u64) -> Wall {
    let mut tiles = Vec::with_capacity(TOTAL_TILES);
    for t in Tile::all() {
        for _ in 0..COPIES_PER_KIND {
            tiles.push(t);
        }
    }
    SplitMix64::new(seed).shuffle(&mut tiles);
    Wall { tiles, front: 0, back: TOTAL_TILES }
}

impl Wall {
    /// Builds a wall with a fixed tile order. Crafted-state tests use this
    /// to keep tile conservation intact; game play always goes through
    /// [`shuffle_wall`].
    #[cfg(test)]
    pub(crate) fn from_tiles(tiles: Vec<Tile>) -> Wall {
        let back = tiles.len();
        Wall { tiles, front: 0, back }
    }

    /// Draws the next regular tile, or `None` when exhausted.
    pub fn draw_front(&mut self) -> Option<Tile> {
        if self.front < self.back {
            let t = self.tiles[self.front];
            self.front += 1;
            Some(t)
        } else {
            None
        }
    }

    /// Draws a Kong replacement tile from the tail, or `None` when exhausted.
    pub fn draw_back(&mut self) -> Option<Tile> {
        if self.front < self.back {
            self.back -= 1;
            Some(self.tiles[self.back])
        } else {
            None
        }
    }

    pub fn remaining(&self) -> usize {
        self.back - self.front
    }

    /// Total tiles drawn so far; non-decreasing over a game.
    pub fn draws_made(&self) -> usize {
        TOTAL_TILES - self.remaining()
    }

    /// Multiset of tiles still in the wall.
    pub fn undrawn_counts(&self) -> TileCounts {
        TileCounts::from_tiles(self.tiles[self.front..self.back].iter().copied())
    }

    /// Full shuffled order (for fixtures and determinism checks).
    pub fn order(&self) -> &[Tile] {
        &self.tiles
    }
}
