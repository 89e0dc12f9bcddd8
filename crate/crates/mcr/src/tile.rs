//! Tile identities, the canonical ordering, tile multisets, and the textual
//! notation used by fixtures and the CLI.
//!
//! There are exactly 34 tile kinds with four physical copies each. Kinds are
//! numbered 0..34 in the canonical order
//!
//! ```text
//!  0..9   Characters 1..9   (1C..9C)
//!  9..18  Bamboos    1..9   (1B..9B)
//! 18..27  Dots       1..9   (1D..9D)
//! 27..31  Winds      E,S,W,N (WE, WS, WW, WN)
//! 31..34  Dragons    Red, Green, White (DR, DG, DW)
//! ```
//!
//! and `Tile`'s `Ord` follows this numbering, so the ordering is total and
//! stable across runs.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Number of distinct tile kinds.
pub const TILE_KINDS: usize = 34;
/// Physical copies of each kind in the wall.
pub const COPIES_PER_KIND: u8 = 4;
/// Total physical tiles (34 kinds x 4 copies).
pub const TOTAL_TILES: usize = 136;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TileError {
    #[error("rank {rank} out of range for {suit:?}")]
    BadRank { suit: Suit, rank: u8 },
    #[error("invalid tile notation '{0}'")]
    BadNotation(String),
    #[error("tile id {0} out of range")]
    BadId(u8),
}

/// The five tile categories.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suit {
    Characters,
    Bamboos,
    Dots,
    Winds,
    Dragons,
}

impl Suit {
    pub const ALL: [Suit; 5] = [
        Suit::Characters,
        Suit::Bamboos,
        Suit::Dots,
        Suit::Winds,
        Suit::Dragons,
    ];

    /// The three suits that allow Chows.
    pub const SUITED: [Suit; 3] = [Suit::Characters, Suit::Bamboos, Suit::Dots];

    pub const fn is_suited(self) -> bool {
        matches!(self, Suit::Characters | Suit::Bamboos | Suit::Dots)
    }

    /// Highest valid rank: 9 for suited, 4 for winds, 3 for dragons.
    pub const fn max_rank(self) -> u8 {
        match self {
            Suit::Characters | Suit::Bamboos | Suit::Dots => 9,
            Suit::Winds => 4,
            Suit::Dragons => 3,
        }
    }

    const fn base_id(self) -> u8 {
        match self {
            Suit::Characters => 0,
            Suit::Bamboos => 9,
            Suit::Dots => 18,
            Suit::Winds => 27,
            Suit::Dragons => 31,
        }
    }
}

/// Seat/round winds, in seat order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Wind {
    East,
    South,
    West,
    North,
}

impl Wind {
    pub const ALL: [Wind; 4] = [Wind::East, Wind::South, Wind::West, Wind::North];

    pub const fn index(self) -> usize {
        self as usize
    }

    /// The wind tile carrying this wind.
    pub fn tile(self) -> Tile {
        Tile::new(Suit::Winds, self as u8 + 1).unwrap()
    }
}

/// One of the 34 tile kinds. Wraps the canonical id (0..34).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tile(u8);

impl Tile {
    pub fn new(suit: Suit, rank: u8) -> Result<Tile, TileError> {
        if rank == 0 || rank > suit.max_rank() {
            return Err(TileError::BadRank { suit, rank });
        }
        Ok(Tile(suit.base_id() + rank - 1))
    }

    pub const fn from_id(id: u8) -> Result<Tile, TileError> {
        if id < TILE_KINDS as u8 {
            Ok(Tile(id))
        } else {
            Err(TileError::BadId(id))
        }
    }

    /// Canonical id, 0..34.
    pub const fn id(self) -> u8 {
        self.0
    }

    pub const fn suit(self) -> Suit {
        match self.0 {
            0..=8 => Suit::Characters,
            9..=17 => Suit::Bamboos,
            18..=26 => Suit::Dots,
            27..=30 => Suit::Winds,
            _ => Suit::Dragons,
        }
    }

    /// 1-based rank within the suit (1-9 suited, 1-4 winds, 1-3 dragons).
    pub const fn rank(self) -> u8 {
        self.0 - self.suit().base_id() + 1
    }

    pub const fn is_suited(self) -> bool {
        self.0 < 27
    }

    pub const fn is_honor(self) -> bool {
        self.0 >= 27
    }

    /// 1 or 9 of a suit.
    pub const fn is_terminal(self) -> bool {
        self.is_suited() && (self.rank() == 1 || self.rank() == 9)
    }

    /// Terminal or honor.
    pub const fn is_orphan(self) -> bool {
        self.is_terminal() || self.is_honor()
    }

    /// All 34 kinds in canonical order.
    pub fn all() -> impl Iterator<Item = Tile> {
        (0..TILE_KINDS as u8).map(Tile)
    }

    /// Offsets a suited tile within its suit; `None` if it leaves the suit.
    pub fn offset(self, delta: i8) -> Option<Tile> {
        if !self.is_suited() {
            return None;
        }
        let rank = self.rank() as i8 + delta;
        if (1..=9).contains(&rank) {
            Some(Tile(self.suit().base_id() + rank as u8 - 1))
        } else {
            None
        }
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.suit() {
            Suit::Characters => write!(f, "{}C", self.rank()),
            Suit::Bamboos => write!(f, "{}B", self.rank()),
            Suit::Dots => write!(f, "{}D", self.rank()),
            Suit::Winds => write!(f, "W{}", ["E", "S", "W", "N"][self.rank() as usize - 1]),
            Suit::Dragons => write!(f, "D{}", ["R", "G", "W"][self.rank() as usize - 1]),
        }
    }
}

impl fmt::Debug for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Tile {
    type Err = TileError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || TileError::BadNotation(s.to_string());
        let bytes = s.as_bytes();
        if bytes.len() != 2 {
            return Err(bad());
        }
        match (bytes[0], bytes[1]) {
            (r @ b'1'..=b'9', b'C') => Tile::new(Suit::Characters, r - b'0'),
            (r @ b'1'..=b'9', b'B') => Tile::new(Suit::Bamboos, r - b'0'),
            (r @ b'1'..=b'9', b'D') => Tile::new(Suit::Dots, r - b'0'),
            (b'W', b'E') => Tile::new(Suit::Winds, 1),
            (b'W', b'S') => Tile::new(Suit::Winds, 2),
            (b'W', b'W') => Tile::new(Suit::Winds, 3),
            (b'W', b'N') => Tile::new(Suit::Winds, 4),
            (b'D', b'R') => Tile::new(Suit::Dragons, 1),
            (b'D', b'G') => Tile::new(Suit::Dragons, 2),
            (b'D', b'W') => Tile::new(Suit::Dragons, 3),
            _ => Err(bad()),
        }
        .map_err(|_| bad())
    }
}

/// A multiset over the 34 tile kinds; per-kind counts are 0..=4.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TileCounts([u8; TILE_KINDS]);

impl Default for TileCounts {
    fn default() -> Self {
        TileCounts([0; TILE_KINDS])
    }
}

impl TileCounts {
    pub fn new() -> Self {
        TileCounts([0; TILE_KINDS])
    }

    pub fn from_tiles<I: IntoIterator<Item = Tile>>(tiles: I) -> Self {
        let mut c = Self::new();
        for t in tiles {
            c.add(t);
        }
        c
    }

    pub fn count(&self, tile: Tile) -> u8 {
        self.0[tile.id() as usize]
    }

    pub fn add(&mut self, tile: Tile) {
        self.0[tile.id() as usize] += 1;
    }

    pub fn add_n(&mut self, tile: Tile, n: u8) {
        self.0[tile.id() as usize] += n;
    }

    /// Removes one copy; `false` (and no change) if none held.
    pub fn remove(&mut self, tile: Tile) -> bool {
        let c = &mut self.0[tile.id() as usize];
        if *c == 0 {
            return false;
        }
        *c -= 1;
        true
    }

    pub fn remove_n(&mut self, tile: Tile, n: u8) -> bool {
        let c = &mut self.0[tile.id() as usize];
        if *c < n {
            return false;
        }
        *c -= n;
        true
    }

    pub fn contains(&self, tile: Tile) -> bool {
        self.count(tile) > 0
    }

    pub fn total(&self) -> usize {
        self.0.iter().map(|&c| c as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Number of distinct kinds present.
    pub fn kinds(&self) -> usize {
        self.0.iter().filter(|&&c| c > 0).count()
    }

    /// Raw per-kind counts indexed by canonical id.
    pub fn raw(&self) -> &[u8; TILE_KINDS] {
        &self.0
    }

    /// Distinct kinds present, in canonical order.
    pub fn iter_kinds(&self) -> impl Iterator<Item = Tile> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| Tile(i as u8))
    }

    /// Every tile with multiplicity, in canonical order.
    pub fn iter_tiles(&self) -> impl Iterator<Item = Tile> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| std::iter::repeat(Tile(i as u8)).take(c as usize))
    }

    pub fn merged(&self, other: &TileCounts) -> TileCounts {
        let mut out = self.clone();
        for (i, &c) in other.0.iter().enumerate() {
            out.0[i] += c;
        }
        out
    }

    /// Parses concatenated notation, e.g. `"2C2C3C7B7BWEWE"`. Whitespace
    /// between tiles is allowed.
    pub fn parse(s: &str) -> Result<TileCounts, TileError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.len() % 2 != 0 {
            return Err(TileError::BadNotation(s.to_string()));
        }
        let mut counts = TileCounts::new();
        for chunk in compact.as_bytes().chunks(2) {
            let tok = std::str::from_utf8(chunk).map_err(|_| TileError::BadNotation(s.into()))?;
            counts.add(tok.parse()?);
        }
        Ok(counts)
    }
}

impl fmt::Display for TileCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in self.iter_tiles() {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TileCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exactly_34_kinds_with_valid_ranks() {
        assert_eq!(Tile::all().count(), 34);
        for t in Tile::all() {
            assert!(t.rank() >= 1 && t.rank() <= t.suit().max_rank());
            assert_eq!(Tile::new(t.suit(), t.rank()).unwrap(), t);
        }
        assert!(Tile::new(Suit::Winds, 5).is_err());
        assert!(Tile::new(Suit::Dragons, 4).is_err());
        assert!(Tile::new(Suit::Bamboos, 0).is_err());
        assert!(Tile::from_id(34).is_err());
    }

    #[test]
    fn ordering_is_total_and_matches_ids() {
        let tiles: Vec<Tile> = Tile::all().collect();
        for (i, &a) in tiles.iter().enumerate() {
            for &b in &tiles[i + 1..] {
                assert!(a < b);
                assert!(!(b < a));
            }
        }
    }

    #[test]
    fn notation_round_trips() {
        for t in Tile::all() {
            let s = t.to_string();
            assert_eq!(s.parse::<Tile>().unwrap(), t, "{s}");
        }
        assert_eq!("5D".parse::<Tile>().unwrap(), Tile::new(Suit::Dots, 5).unwrap());
        assert_eq!("WN".parse::<Tile>().unwrap(), Tile::new(Suit::Winds, 4).unwrap());
        assert_eq!("DW".parse::<Tile>().unwrap(), Tile::new(Suit::Dragons, 3).unwrap());
        assert!("XX".parse::<Tile>().is_err());
        assert!("0C".parse::<Tile>().is_err());
        assert!("5".parse::<Tile>().is_err());
    }

    #[test]
    fn orphan_classification() {
        assert!("1C".parse::<Tile>().unwrap().is_terminal());
        assert!("9D".parse::<Tile>().unwrap().is_terminal());
        assert!(!"5B".parse::<Tile>().unwrap().is_terminal());
        assert!("WE".parse::<Tile>().unwrap().is_honor());
        assert!("DR".parse::<Tile>().unwrap().is_orphan());
        assert!(!"WS".parse::<Tile>().unwrap().is_terminal());
    }

    #[test]
    fn counts_parse_and_round_trip() {
        let c = TileCounts::parse("2C2C3C3C4C4C6B6B7B7B9B9B1D1D").unwrap();
        assert_eq!(c.total(), 14);
        assert_eq!(c.kinds(), 7);
        assert_eq!(c.count("2C".parse().unwrap()), 2);
        let again = TileCounts::parse(&c.to_string()).unwrap();
        assert_eq!(c, again);
    }

    #[test]
    fn counts_add_remove() {
        let mut c = TileCounts::new();
        let t: Tile = "7B".parse().unwrap();
        assert!(!c.remove(t));
        c.add(t);
        c.add(t);
        assert_eq!(c.count(t), 2);
        assert!(c.remove(t));
        assert_eq!(c.count(t), 1);
        assert!(c.remove_n(t, 1));
        assert!(!c.remove_n(t, 1));
        assert!(c.is_empty());
    }

    #[test]
    fn wind_tiles() {
        assert_eq!(Wind::East.tile(), "WE".parse().unwrap());
        assert_eq!(Wind::North.tile(), "WN".parse().unwrap());
    }
}
