//! The implemented scoring-pattern subset: 25 patterns spanning 1 to 88
//! points, their match rules, and the explicit exclusion list.
//!
//! This is a documented subset of the full MCR table, chosen so that the
//! named special shapes are covered and common hands can reach the 8-point
//! minimum. Patterns worth 6 or more points form the "major pattern" list
//! used by the play-style metrics. Known simplifications, all deliberate:
//!
//! - no win-by-robbing-a-kong or out-on-replacement patterns;
//! - `FourConcealedPungs` ignores whether the final pung was completed by a
//!   discard;
//! - `AllHonors` is a whole-hand predicate and so also fires on honor-only
//!   seven-pair hands;
//! - there is no zero-fan fallback ("chicken hand"): a hand that matches
//!   nothing scores 0 and cannot win.

use std::fmt;

use super::decompose::{SpecialShape, WinningDecomposition};
use super::WinContext;
use crate::meld::Meld;
use crate::tile::{Suit, Tile, TileCounts};

/// The 25 implemented scoring patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pattern {
    ThirteenOrphans,
    BigThreeDragons,
    FourConcealedPungs,
    AllHonors,
    GreaterHonorsAndKnitted,
    SevenPairs,
    FullFlush,
    PureStraight,
    LesserHonorsAndKnitted,
    KnittedStraight,
    MixedTripleChow,
    MixedStraight,
    LastTileDraw,
    AllPungs,
    HalfFlush,
    MixedShiftedChows,
    AllTypes,
    MeldedHand,
    OutsideHand,
    FullyConcealedHand,
    AllChows,
    AllSimples,
    DragonPung,
    ConcealedHand,
    SelfDrawn,
}

pub const ALL_PATTERNS: [Pattern; 25] = [
    Pattern::ThirteenOrphans,
    Pattern::BigThreeDragons,
    Pattern::FourConcealedPungs,
    Pattern::AllHonors,
    Pattern::GreaterHonorsAndKnitted,
    Pattern::SevenPairs,
    Pattern::FullFlush,
    Pattern::PureStraight,
    Pattern::LesserHonorsAndKnitted,
    Pattern::KnittedStraight,
    Pattern::MixedTripleChow,
    Pattern::MixedStraight,
    Pattern::LastTileDraw,
    Pattern::AllPungs,
    Pattern::HalfFlush,
    Pattern::MixedShiftedChows,
    Pattern::AllTypes,
    Pattern::MeldedHand,
    Pattern::OutsideHand,
    Pattern::FullyConcealedHand,
    Pattern::AllChows,
    Pattern::AllSimples,
    Pattern::DragonPung,
    Pattern::ConcealedHand,
    Pattern::SelfDrawn,
];

impl Pattern {
    pub const fn points(self) -> u32 {
        match self {
            Pattern::ThirteenOrphans => 88,
            Pattern::BigThreeDragons => 88,
            Pattern::FourConcealedPungs => 64,
            Pattern::AllHonors => 64,
            Pattern::GreaterHonorsAndKnitted => 44,
            Pattern::SevenPairs => 24,
            Pattern::FullFlush => 24,
            Pattern::PureStraight => 16,
            Pattern::LesserHonorsAndKnitted => 12,
            Pattern::KnittedStraight => 12,
            Pattern::MixedTripleChow => 8,
            Pattern::MixedStraight => 8,
            Pattern::LastTileDraw => 8,
            Pattern::AllPungs => 6,
            Pattern::HalfFlush => 6,
            Pattern::MixedShiftedChows => 6,
            Pattern::AllTypes => 6,
            Pattern::MeldedHand => 6,
            Pattern::OutsideHand => 4,
            Pattern::FullyConcealedHand => 4,
            Pattern::AllChows => 2,
            Pattern::AllSimples => 2,
            Pattern::DragonPung => 2,
            Pattern::ConcealedHand => 2,
            Pattern::SelfDrawn => 1,
        }
    }

    /// Major patterns (the event space for the game-level style metric):
    /// every implemented pattern worth at least 6 points.
    pub const fn is_major(self) -> bool {
        self.points() >= 6
    }

    pub fn name(self) -> &'static str {
        match self {
            Pattern::ThirteenOrphans => "ThirteenOrphans",
            Pattern::BigThreeDragons => "BigThreeDragons",
            Pattern::FourConcealedPungs => "FourConcealedPungs",
            Pattern::AllHonors => "AllHonors",
            Pattern::GreaterHonorsAndKnitted => "GreaterHonorsAndKnitted",
            Pattern::SevenPairs => "SevenPairs",
            Pattern::FullFlush => "FullFlush",
            Pattern::PureStraight => "PureStraight",
            Pattern::LesserHonorsAndKnitted => "LesserHonorsAndKnitted",
            Pattern::KnittedStraight => "KnittedStraight",
            Pattern::MixedTripleChow => "MixedTripleChow",
            Pattern::MixedStraight => "MixedStraight",
            Pattern::LastTileDraw => "LastTileDraw",
            Pattern::AllPungs => "AllPungs",
            Pattern::HalfFlush => "HalfFlush",
            Pattern::MixedShiftedChows => "MixedShiftedChows",
            Pattern::AllTypes => "AllTypes",
            Pattern::MeldedHand => "MeldedHand",
            Pattern::OutsideHand => "OutsideHand",
            Pattern::FullyConcealedHand => "FullyConcealedHand",
            Pattern::AllChows => "AllChows",
            Pattern::AllSimples => "AllSimples",
            Pattern::DragonPung => "DragonPung",
            Pattern::ConcealedHand => "ConcealedHand",
            Pattern::SelfDrawn => "SelfDrawn",
        }
    }

    pub fn from_name(name: &str) -> Option<Pattern> {
        ALL_PATTERNS.iter().copied().find(|p| p.name() == name)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The major-pattern list in canonical order.
pub fn major_patterns() -> Vec<Pattern> {
    ALL_PATTERNS.iter().copied().filter(|p| p.is_major()).collect()
}

/// Exclusion rules: when the first pattern is matched, every instance of the
/// second is dropped (the first already implies it).
pub const EXCLUSIONS: &[(Pattern, Pattern)] = &[
    (Pattern::ThirteenOrphans, Pattern::AllTypes),
    (Pattern::ThirteenOrphans, Pattern::ConcealedHand),
    (Pattern::BigThreeDragons, Pattern::DragonPung),
    (Pattern::FourConcealedPungs, Pattern::AllPungs),
    (Pattern::FourConcealedPungs, Pattern::ConcealedHand),
    (Pattern::FourConcealedPungs, Pattern::FullyConcealedHand),
    (Pattern::AllHonors, Pattern::AllPungs),
    (Pattern::AllHonors, Pattern::OutsideHand),
    (Pattern::GreaterHonorsAndKnitted, Pattern::AllTypes),
    (Pattern::GreaterHonorsAndKnitted, Pattern::ConcealedHand),
    (Pattern::LesserHonorsAndKnitted, Pattern::ConcealedHand),
    (Pattern::SevenPairs, Pattern::ConcealedHand),
    (Pattern::FullyConcealedHand, Pattern::SelfDrawn),
    (Pattern::LastTileDraw, Pattern::SelfDrawn),
];

/// Matches every implemented pattern against one decomposition, before
/// exclusion rules. `DragonPung` may appear more than once.
pub(super) fn match_patterns(
    d: &WinningDecomposition,
    hand: &TileCounts,
    exposed: &[Meld],
    ctx: &WinContext,
) -> Vec<(Pattern, u32)> {
    let mut found: Vec<Pattern> = Vec::new();
    let all = whole_hand(hand, exposed);
    let suited_suits: Vec<Suit> = Suit::SUITED
        .iter()
        .copied()
        .filter(|&s| all.iter_kinds().any(|t| t.suit() == s))
        .collect();
    let has_honor = all.iter_kinds().any(|t| t.is_honor());
    let all_concealed = exposed.iter().all(|m| m.is_concealed());

    // Special shapes.
    match d.special {
        Some(SpecialShape::SevenPairs) => found.push(Pattern::SevenPairs),
        Some(SpecialShape::ThirteenOrphans) => found.push(Pattern::ThirteenOrphans),
        Some(SpecialShape::KnittedStraight) => found.push(Pattern::KnittedStraight),
        Some(SpecialShape::HonorsAndKnitted) => {
            let honors = all.iter_kinds().filter(|t| t.is_honor()).count();
            found.push(if honors == 7 {
                Pattern::GreaterHonorsAndKnitted
            } else {
                Pattern::LesserHonorsAndKnitted
            });
        }
        None => {}
    }

    // Whole-hand tile predicates.
    if suited_suits.len() == 1 {
        found.push(if has_honor {
            Pattern::HalfFlush
        } else {
            Pattern::FullFlush
        });
    }
    if suited_suits.is_empty() {
        found.push(Pattern::AllHonors);
    }
    if all.iter_kinds().all(|t| !t.is_orphan()) {
        found.push(Pattern::AllSimples);
    }
    if suited_suits.len() == 3 {
        let winds = all.iter_kinds().any(|t| t.suit() == Suit::Winds);
        let dragons = all.iter_kinds().any(|t| t.suit() == Suit::Dragons);
        if winds && dragons {
            found.push(Pattern::AllTypes);
        }
    }

    // Meld-structure patterns (only meaningful on the general shape).
    if d.special.is_none() {
        let melds = &d.melds;
        let pair = d.pair.expect("general shape has a pair");
        let chows: Vec<Tile> = melds
            .iter()
            .filter(|m| !m.is_pung_like())
            .map(|m| m.base())
            .collect();
        if chows.len() == 4 && pair.is_suited() {
            found.push(Pattern::AllChows);
        }
        if melds.iter().all(|m| m.is_pung_like()) {
            found.push(Pattern::AllPungs);
            if melds.iter().all(|m| m.is_concealed()) {
                found.push(Pattern::FourConcealedPungs);
            }
        }
        let dragon_pungs: Vec<Tile> = melds
            .iter()
            .filter(|m| m.is_pung_like() && m.base().suit() == Suit::Dragons)
            .map(|m| m.base())
            .collect();
        if dragon_pungs.len() == 3 {
            found.push(Pattern::BigThreeDragons);
        }
        for _ in &dragon_pungs {
            found.push(Pattern::DragonPung);
        }
        if Suit::SUITED.iter().any(|&s| {
            [1u8, 4, 7]
                .iter()
                .all(|&r| chows.contains(&Tile::new(s, r).unwrap()))
        }) {
            found.push(Pattern::PureStraight);
        }
        if suit_permutations().iter().any(|p| {
            chows.contains(&Tile::new(p[0], 1).unwrap())
                && chows.contains(&Tile::new(p[1], 4).unwrap())
                && chows.contains(&Tile::new(p[2], 7).unwrap())
        }) {
            found.push(Pattern::MixedStraight);
        }
        if (1u8..=7).any(|r| {
            Suit::SUITED
                .iter()
                .all(|&s| chows.contains(&Tile::new(s, r).unwrap()))
        }) {
            found.push(Pattern::MixedTripleChow);
        }
        if (1u8..=5).any(|r| {
            suit_permutations().iter().any(|p| {
                chows.contains(&Tile::new(p[0], r).unwrap())
                    && chows.contains(&Tile::new(p[1], r + 1).unwrap())
                    && chows.contains(&Tile::new(p[2], r + 2).unwrap())
            })
        }) {
            found.push(Pattern::MixedShiftedChows);
        }
        if melds.iter().all(|m| m.has_orphan()) && pair.is_orphan() {
            found.push(Pattern::OutsideHand);
        }
    }

    // Win-context patterns.
    let claimed_melds = exposed.iter().filter(|m| !m.is_concealed()).count();
    if claimed_melds == 4 && !ctx.self_drawn {
        found.push(Pattern::MeldedHand);
    }
    if all_concealed {
        found.push(if ctx.self_drawn {
            Pattern::FullyConcealedHand
        } else {
            Pattern::ConcealedHand
        });
    }
    if ctx.self_drawn {
        found.push(Pattern::SelfDrawn);
    }
    if ctx.self_drawn && ctx.last_wall_tile {
        found.push(Pattern::LastTileDraw);
    }

    apply_exclusions(found)
}

fn apply_exclusions(found: Vec<Pattern>) -> Vec<(Pattern, u32)> {
    let mut kept = found.clone();
    for &(winner, excluded) in EXCLUSIONS {
        if found.contains(&winner) {
            kept.retain(|&p| p != excluded);
        }
    }
    kept.sort();
    kept.into_iter().map(|p| (p, p.points())).collect()
}

fn whole_hand(hand: &TileCounts, exposed: &[Meld]) -> TileCounts {
    let mut all = hand.clone();
    for m in exposed {
        for t in m.tiles() {
            all.add(t);
        }
    }
    all
}

fn suit_permutations() -> &'static [[Suit; 3]; 6] {
    use Suit::{Bamboos as B, Characters as C, Dots as D};
    &[
        [C, B, D],
        [C, D, B],
        [B, C, D],
        [B, D, C],
        [D, C, B],
        [D, B, C],
    ]
}
