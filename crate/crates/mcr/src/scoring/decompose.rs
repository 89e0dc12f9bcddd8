//! Winning-shape decomposition: the general winning pattern (four melds plus
//! a pair) and the special shapes that do not follow it.

use crate::meld::Meld;
use crate::tile::{Suit, Tile, TileCounts, TILE_KINDS};

/// Special winning shapes outside the general four-melds-plus-pair pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialShape {
    /// Seven pairs (a quad counts as two pairs).
    SevenPairs,
    /// One of each terminal and honor kind plus a duplicate of any of them.
    ThirteenOrphans,
    /// 1-4-7 / 2-5-8 / 3-6-9 across the three suits, plus one regular meld
    /// and a pair.
    KnittedStraight,
    /// Fourteen distinct tiles drawn from one knitted arrangement plus the
    /// seven honors. Scored as Lesser or Greater depending on honor count.
    HonorsAndKnitted,
}

/// One complete reading of a 14-tile hand as a winning shape.
///
/// For the general pattern `melds` holds all four melds (the exposed ones
/// first, hand-derived melds with `claimed_from = None`) and `pair` the pair
/// tile. For `KnittedStraight`, `melds` holds only the one regular meld.
/// Other specials carry no melds and no pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WinningDecomposition {
    pub special: Option<SpecialShape>,
    pub melds: Vec<Meld>,
    pub pair: Option<Tile>,
}

/// The six ways of assigning the three rank classes {1,4,7}, {2,5,8},
/// {3,6,9} to the three suits. `perm[class] = suit index`.
const KNIT_PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

fn knitted_tiles(perm: &[usize; 3]) -> [Tile; 9] {
    let mut out = [Tile::from_id(0).unwrap(); 9];
    let mut i = 0;
    for (class, &suit_ix) in perm.iter().enumerate() {
        let suit = Suit::SUITED[suit_ix];
        for step in 0..3 {
            out[i] = Tile::new(suit, (1 + class + 3 * step) as u8).unwrap();
            i += 1;
        }
    }
    out
}

/// Enumerates every valid winning decomposition of `hand` (the concealed
/// tiles, including the winning tile) together with the `exposed` melds.
/// Returns an empty list exactly when the hand is not a winning shape.
pub fn decompose(hand: &TileCounts, exposed: &[Meld]) -> Vec<WinningDecomposition> {
    let mut out = Vec::new();
    if hand.total() + 3 * exposed.len() != 14 {
        return out;
    }

    if exposed.is_empty() {
        if is_seven_pairs(hand) {
            out.push(WinningDecomposition {
                special: Some(SpecialShape::SevenPairs),
                melds: Vec::new(),
                pair: None,
            });
        }
        if is_thirteen_orphans(hand) {
            out.push(WinningDecomposition {
                special: Some(SpecialShape::ThirteenOrphans),
                melds: Vec::new(),
                pair: None,
            });
        }
        if is_honors_and_knitted(hand) {
            out.push(WinningDecomposition {
                special: Some(SpecialShape::HonorsAndKnitted),
                melds: Vec::new(),
                pair: None,
            });
        }
    }
    if exposed.len() <= 1 {
        knitted_straights(hand, exposed, &mut out);
    }

    general_decompositions(hand, exposed, &mut out);
    out
}

fn is_seven_pairs(hand: &TileCounts) -> bool {
    hand.raw().iter().all(|&c| c % 2 == 0)
}

fn is_thirteen_orphans(hand: &TileCounts) -> bool {
    let orphans: Vec<Tile> = Tile::all().filter(|t| t.is_orphan()).collect();
    debug_assert_eq!(orphans.len(), 13);
    hand.iter_kinds().all(|t| t.is_orphan()) && orphans.iter().all(|&t| hand.contains(t))
}

fn is_honors_and_knitted(hand: &TileCounts) -> bool {
    if hand.raw().iter().any(|&c| c > 1) {
        return false;
    }
    KNIT_PERMS.iter().any(|perm| {
        let knit = knitted_tiles(perm);
        hand.iter_kinds()
            .all(|t| t.is_honor() || knit.contains(&t))
    })
}

fn knitted_straights(hand: &TileCounts, exposed: &[Meld], out: &mut Vec<WinningDecomposition>) {
    for perm in &KNIT_PERMS {
        let knit = knitted_tiles(perm);
        if !knit.iter().all(|&t| hand.contains(t)) {
            continue;
        }
        let mut rest = hand.clone();
        for &t in &knit {
            rest.remove(t);
        }
        if exposed.len() == 1 {
            // remaining two tiles must be the pair
            if let Some(pair) = sole_pair(&rest) {
                out.push(WinningDecomposition {
                    special: Some(SpecialShape::KnittedStraight),
                    melds: exposed.to_vec(),
                    pair: Some(pair),
                });
            }
        } else {
            // remaining five tiles: one meld plus the pair
            for pair in rest.iter_kinds().collect::<Vec<_>>() {
                if rest.count(pair) < 2 {
                    continue;
                }
                let mut counts = *rest.raw();
                counts[pair.id() as usize] -= 2;
                let mut acc = Vec::new();
                let mut found = Vec::new();
                peel_melds(&mut counts, 1, &mut acc, &mut found);
                for melds in found {
                    out.push(WinningDecomposition {
                        special: Some(SpecialShape::KnittedStraight),
                        melds,
                        pair: Some(pair),
                    });
                }
            }
        }
    }
}

fn sole_pair(rest: &TileCounts) -> Option<Tile> {
    let mut kinds = rest.iter_kinds();
    let t = kinds.next()?;
    if kinds.next().is_none() && rest.count(t) == 2 {
        Some(t)
    } else {
        None
    }
}

fn general_decompositions(hand: &TileCounts, exposed: &[Meld], out: &mut Vec<WinningDecomposition>) {
    let need = 4 - exposed.len();
    for pair in hand.iter_kinds().collect::<Vec<_>>() {
        if hand.count(pair) < 2 {
            continue;
        }
        let mut counts = *hand.raw();
        counts[pair.id() as usize] -= 2;
        let mut acc = Vec::new();
        let mut found = Vec::new();
        peel_melds(&mut counts, need, &mut acc, &mut found);
        for melds in found {
            let mut all = exposed.to_vec();
            all.extend(melds);
            out.push(WinningDecomposition {
                special: None,
                melds: all,
                pair: Some(pair),
            });
        }
    }
}

/// Enumerates every split of `counts` into exactly `need` melds. The lowest
/// remaining kind must be consumed first (as a Pung or as the base of a
/// Chow), which visits each distinct meld multiset exactly once.
fn peel_melds(
    counts: &mut [u8; TILE_KINDS],
    need: usize,
    acc: &mut Vec<Meld>,
    out: &mut Vec<Vec<Meld>>,
) {
    let first = counts.iter().position(|&c| c > 0);
    let Some(i) = first else {
        if need == 0 {
            out.push(acc.clone());
        }
        return;
    };
    if need == 0 {
        return;
    }
    let tile = Tile::from_id(i as u8).unwrap();
    if counts[i] >= 3 {
        counts[i] -= 3;
        acc.push(Meld::pung(tile, None));
        peel_melds(counts, need - 1, acc, out);
        acc.pop();
        counts[i] += 3;
    }
    if tile.is_suited() && tile.rank() <= 7 && counts[i + 1] > 0 && counts[i + 2] > 0 {
        counts[i] -= 1;
        counts[i + 1] -= 1;
        counts[i + 2] -= 1;
        acc.push(Meld::chow(tile, None).unwrap());
        peel_melds(counts, need - 1, acc, out);
        acc.pop();
        counts[i] += 1;
        counts[i + 1] += 1;
        counts[i + 2] += 1;
    }
}
