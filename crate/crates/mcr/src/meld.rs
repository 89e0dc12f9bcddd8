//! Melds: Chows, Pungs, and Kongs, plus Chow enumeration against a claimed
//! discard. Constructors validate shape (Chows exist only over suited tiles).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::tile::{Tile, TileCounts};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MeldError {
    #[error("chow base {0} must be a suited tile of rank 1-7")]
    BadChowBase(Tile),
    #[error("invalid meld notation '{0}'")]
    BadNotation(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeldKind {
    Chow,
    Pung,
    ExposedKong,
    ConcealedKong,
}

/// A three- or four-tile group. For a Chow, `base` is the lowest tile of the
/// run; for the others it is the repeated tile. `claimed_from` is the seat
/// whose discard completed the meld; `None` means the meld came entirely from
/// the owner's hand (a concealed group).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Meld {
    kind: MeldKind,
    base: Tile,
    claimed_from: Option<u8>,
}

impl Meld {
    pub fn chow(base: Tile, claimed_from: Option<u8>) -> Result<Meld, MeldError> {
        if !base.is_suited() || base.rank() > 7 {
            return Err(MeldError::BadChowBase(base));
        }
        Ok(Meld { kind: MeldKind::Chow, base, claimed_from })
    }

    pub fn pung(tile: Tile, claimed_from: Option<u8>) -> Meld {
        Meld { kind: MeldKind::Pung, base: tile, claimed_from }
    }

    pub fn exposed_kong(tile: Tile, claimed_from: Option<u8>) -> Meld {
        Meld { kind: MeldKind::ExposedKong, base: tile, claimed_from }
    }

    pub fn concealed_kong(tile: Tile) -> Meld {
        Meld { kind: MeldKind::ConcealedKong, base: tile, claimed_from: None }
    }

    pub fn kind(&self) -> MeldKind {
        self.kind
    }

    pub fn base(&self) -> Tile {
        self.base
    }

    pub fn claimed_from(&self) -> Option<u8> {
        self.claimed_from
    }

    /// True when no tile of the meld came from another seat's discard.
    /// Concealed Kongs sit on the table but still count as concealed.
    pub fn is_concealed(&self) -> bool {
        self.claimed_from.is_none()
    }

    pub fn is_pung_like(&self) -> bool {
        matches!(
            self.kind,
            MeldKind::Pung | MeldKind::ExposedKong | MeldKind::ConcealedKong
        )
    }

    pub fn is_kong(&self) -> bool {
        matches!(self.kind, MeldKind::ExposedKong | MeldKind::ConcealedKong)
    }

    /// Physical tiles in the meld (3 or 4).
    pub fn tiles(&self) -> Vec<Tile> {
        match self.kind {
            MeldKind::Chow => vec![
                self.base,
                self.base.offset(1).unwrap(),
                self.base.offset(2).unwrap(),
            ],
            MeldKind::Pung => vec![self.base; 3],
            MeldKind::ExposedKong | MeldKind::ConcealedKong => vec![self.base; 4],
        }
    }

    /// Hand-size equivalence: every meld stands in for 3 hand tiles (a Kong's
    /// fourth tile is balanced by its replacement draw).
    pub fn tile_equivalent(&self) -> usize {
        3
    }

    /// True if the meld contains a terminal or honor tile.
    pub fn has_orphan(&self) -> bool {
        match self.kind {
            MeldKind::Chow => self.base.rank() == 1 || self.base.rank() == 7,
            _ => self.base.is_orphan(),
        }
    }
}

impl fmt::Display for Meld {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            MeldKind::Chow => "chow",
            MeldKind::Pung => "pung",
            MeldKind::ExposedKong => "kong",
            MeldKind::ConcealedKong => "ckong",
        };
        write!(f, "{tag}:{}", self.base)
    }
}

impl FromStr for Meld {
    type Err = MeldError;

    /// Parses `chow:3C`, `pung:WE`, `kong:5D`, `ckong:5D`. Claimed melds
    /// parsed from text get `claimed_from = None`; the notation is for
    /// fixtures and the `score` CLI, where provenance does not matter except
    /// for concealment, which the `ckong` tag carries.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || MeldError::BadNotation(s.to_string());
        let (tag, tile) = s.split_once(':').ok_or_else(bad)?;
        let tile: Tile = tile.parse().map_err(|_| bad())?;
        match tag {
            "chow" => Meld::chow(tile, Some(0)),
            "pung" => Ok(Meld::pung(tile, Some(0))),
            "kong" => Ok(Meld::exposed_kong(tile, Some(0))),
            "ckong" => Ok(Meld::concealed_kong(tile)),
            _ => Err(bad()),
        }
    }
}

/// All Chow melds that could be formed from `hand` plus the claimed tile.
/// Empty for winds and dragons. Results are ordered by base rank.
pub fn enumerate_chows(hand: &TileCounts, claimed: Tile) -> Vec<Meld> {
    let mut out = Vec::new();
    if !claimed.is_suited() {
        return out;
    }
    for base_delta in [-2i8, -1, 0] {
        let base = match claimed.offset(base_delta) {
            Some(b) if b.rank() <= 7 => b,
            _ => continue,
        };
        let needed = [base, base.offset(1).unwrap(), base.offset(2).unwrap()];
        if needed
            .iter()
            .all(|&t| t == claimed || hand.contains(t))
        {
            out.push(Meld::chow(base, None).unwrap());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tile {
        s.parse().unwrap()
    }

    #[test]
    fn chow_rejects_honors_and_high_bases() {
        assert!(Meld::chow(t("DR"), None).is_err());
        assert!(Meld::chow(t("WE"), None).is_err());
        assert!(Meld::chow(t("8B"), None).is_err());
        assert!(Meld::chow(t("7B"), None).is_ok());
    }

    #[test]
    fn meld_tiles() {
        assert_eq!(
            Meld::chow(t("3D"), None).unwrap().tiles(),
            vec![t("3D"), t("4D"), t("5D")]
        );
        assert_eq!(Meld::pung(t("WE"), Some(2)).tiles(), vec![t("WE"); 3]);
        assert_eq!(Meld::concealed_kong(t("5C")).tiles(), vec![t("5C"); 4]);
    }

    #[test]
    fn concealment() {
        assert!(Meld::concealed_kong(t("5C")).is_concealed());
        assert!(Meld::pung(t("5C"), None).is_concealed());
        assert!(!Meld::pung(t("5C"), Some(1)).is_concealed());
    }

    // Forced single chow: hand {3D,4D} + claimed 5D.
    #[test]
    fn enumerate_chows_forced() {
        let hand = TileCounts::parse("3D4D").unwrap();
        let chows = enumerate_chows(&hand, t("5D"));
        assert_eq!(chows.len(), 1);
        assert_eq!(chows[0].base(), t("3D"));
    }

    #[test]
    fn enumerate_chows_honor_is_empty() {
        let hand = TileCounts::parse("1C2C3C4C5C6C7C8C9C1B2B3B4B").unwrap();
        assert!(enumerate_chows(&hand, t("WW")).is_empty());
    }

    // Exhaustively checked: {1B,2B,4B,5B} + claimed 3B admits exactly the
    // three runs 1-2-3, 2-3-4, 3-4-5.
    #[test]
    fn enumerate_chows_all_positions() {
        let hand = TileCounts::parse("1B2B4B5B").unwrap();
        let chows = enumerate_chows(&hand, t("3B"));
        let bases: Vec<Tile> = chows.iter().map(|m| m.base()).collect();
        assert_eq!(bases, vec![t("1B"), t("2B"), t("3B")]);

        // brute-force cross-check over every candidate base
        let mut expect = Vec::new();
        for base in Tile::all().filter(|b| b.is_suited() && b.rank() <= 7) {
            let run = [base, base.offset(1).unwrap(), base.offset(2).unwrap()];
            if run.contains(&t("3B"))
                && run.iter().all(|&x| x == t("3B") || hand.contains(x))
            {
                expect.push(base);
            }
        }
        assert_eq!(bases, expect);
    }

    #[test]
    fn edge_tiles_limit_positions() {
        let hand = TileCounts::parse("2C3C").unwrap();
        let chows = enumerate_chows(&hand, t("1C"));
        assert_eq!(chows.len(), 1);
        assert_eq!(chows[0].base(), t("1C"));

        let hand = TileCounts::parse("7D8D").unwrap();
        let chows = enumerate_chows(&hand, t("9D"));
        assert_eq!(chows.len(), 1);
        assert_eq!(chows[0].base(), t("7D"));
    }

    #[test]
    fn meld_notation_round_trip() {
        for s in ["chow:3C", "pung:WE", "kong:5D", "ckong:9B"] {
            let m: Meld = s.parse().unwrap();
            assert_eq!(m.to_string(), s);
        }
        assert!("triple:3C".parse::<Meld>().is_err());
        assert!("chow:DR".parse::<Meld>().is_err());
    }
}
