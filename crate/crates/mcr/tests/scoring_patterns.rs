//! One positive and one near-miss negative fixture for every implemented
//! scoring pattern.

use mcr::{score, FanResult, Meld, Pattern, TileCounts, WinContext};

struct Fixture {
    pattern: Pattern,
    hand: &'static str,
    exposed: &'static [&'static str],
    self_drawn: bool,
    last_tile: bool,
}

impl Fixture {
    const fn new(pattern: Pattern, hand: &'static str) -> Fixture {
        Fixture { pattern, hand, exposed: &[], self_drawn: false, last_tile: false }
    }

    fn result(&self) -> Option<FanResult> {
        let hand = TileCounts::parse(self.hand).unwrap();
        let exposed: Vec<Meld> = self.exposed.iter().map(|s| s.parse().unwrap()).collect();
        score(
            &hand,
            &exposed,
            WinContext { self_drawn: self.self_drawn, last_wall_tile: self.last_tile },
        )
        .ok()
    }

    fn matches(&self) -> bool {
        self.result()
            .map(|r| r.matched.iter().any(|&(p, _)| p == self.pattern))
            .unwrap_or(false)
    }
}

fn positive(pattern: Pattern) -> Fixture {
    use Pattern::*;
    match pattern {
        ThirteenOrphans => Fixture::new(pattern, "1C9C1B9B1D9DWEWSWWWNDRDGDW1C"),
        BigThreeDragons => Fixture::new(pattern, "DRDRDRDGDGDGDWDWDW1B2B3B5D5D"),
        FourConcealedPungs => Fixture::new(pattern, "1C1C1C3C3C3C5B5B5B7D7D7D9D9D"),
        AllHonors => Fixture::new(pattern, "WEWEWEWSWSWSWWWWWWDRDRDRDGDG"),
        GreaterHonorsAndKnitted => Fixture::new(pattern, "1C4C7C2B5B8B3DWEWSWWWNDRDGDW"),
        SevenPairs => Fixture::new(pattern, "2C2C3C3C4C4C6B6B7B7B9B9B1D1D"),
        FullFlush => Fixture::new(pattern, "1C2C3C4C5C6C7C8C9C2C3C4C5C5C"),
        PureStraight => Fixture::new(pattern, "1B2B3B4B5B6B7B8B9BDRDRDR5D5D"),
        LesserHonorsAndKnitted => Fixture::new(pattern, "1C4C7C2B5B8B3D6DWEWSWWWNDRDG"),
        KnittedStraight => Fixture::new(pattern, "1C4C7C2B5B8B3D6D9DWEWEWEDRDR"),
        MixedTripleChow => Fixture::new(pattern, "2C3C4C2B3B4B2D3D4DWNWNWN5C5C"),
        MixedStraight => Fixture::new(pattern, "1C2C3C4B5B6B7D8D9DWNWNWN2C2C"),
        LastTileDraw => Fixture {
            self_drawn: true,
            last_tile: true,
            ..Fixture::new(pattern, "1C2C3C4C5C6C7C8C9C1B1B1B5D5D")
        },
        AllPungs => Fixture {
            exposed: &["pung:1C"],
            ..Fixture::new(pattern, "3C3C3C5B5B5B7D7D7D9D9D")
        },
        HalfFlush => Fixture::new(pattern, "1C2C3C4C5C6C7C8C9CWEWEWE5C5C"),
        MixedShiftedChows => Fixture::new(pattern, "2C3C4C3B4B5B4D5D6DWNWNWN5C5C"),
        AllTypes => Fixture::new(pattern, "1C2C3C1B2B3B1D2D3DWEWEWEDRDR"),
        MeldedHand => Fixture {
            exposed: &["chow:1C", "pung:5B", "chow:4C", "pung:WN"],
            ..Fixture::new(pattern, "9D9D")
        },
        OutsideHand => Fixture::new(pattern, "1C2C3C7B8B9B1D1D1D9C9C9CWEWE"),
        FullyConcealedHand => Fixture {
            self_drawn: true,
            ..Fixture::new(pattern, "1C2C3C4C5C6C7C8C9C1B1B1B5D5D")
        },
        AllChows => Fixture::new(pattern, "1C2C3C4C5C6C1B2B3B5D6D7D9D9D"),
        AllSimples => Fixture::new(pattern, "2C3C4C5C6C7C2B3B4B5D5D5D8D8D"),
        DragonPung => Fixture::new(pattern, "DRDRDR1C2C3C4C5C6C7B8B9B5D5D"),
        ConcealedHand => Fixture::new(pattern, "1C2C3C4C5C6C7C8C9C1B1B1B5D5D"),
        SelfDrawn => Fixture {
            self_drawn: true,
            exposed: &["chow:1C"],
            ..Fixture::new(pattern, "4C5C6C7B8B9B1D1D1DWWWW")
        },
    }
}

fn near_miss(pattern: Pattern) -> Fixture {
    use Pattern::*;
    match pattern {
        ThirteenOrphans => Fixture::new(pattern, "1C9C1B9B1D9DWEWSWWWNDRDG5C5C"),
        BigThreeDragons => Fixture::new(pattern, "DRDRDRDGDGDG1B2B3B4B5B6B5D5D"),
        FourConcealedPungs => Fixture {
            exposed: &["pung:1C"],
            ..Fixture::new(pattern, "3C3C3C5B5B5B7D7D7D9D9D")
        },
        AllHonors => Fixture::new(pattern, "WEWEWEWSWSWSWWWWWWDRDRDR5C5C"),
        GreaterHonorsAndKnitted => Fixture::new(pattern, "1C4C7C2B5B8B3D6DWEWSWWWNDRDG"),
        SevenPairs => Fixture::new(pattern, "2C2C3C3C4C4C6B6B7B7B9B9B1D2D"),
        FullFlush => Fixture::new(pattern, "1C2C3C4C5C6C7C8C9C2C3C4CWEWE"),
        PureStraight => Fixture::new(pattern, "1B2B3B4B4B4B7B8B9BDRDRDR5D5D"),
        LesserHonorsAndKnitted => Fixture::new(pattern, "1C4C7C2B5B8B3D5DWEWSWWWNDRDG"),
        KnittedStraight => Fixture::new(pattern, "1C4C7C2B5B8B3D6D8DWEWEWEDRDR"),
        MixedTripleChow => Fixture::new(pattern, "2C3C4C3B4B5B2D3D4DWNWNWN5C5C"),
        MixedStraight => Fixture::new(pattern, "1C2C3C4C5C6C7D8D9DWNWNWN2C2C"),
        LastTileDraw => Fixture {
            self_drawn: true,
            last_tile: false,
            ..Fixture::new(pattern, "1C2C3C4C5C6C7C8C9C1B1B1B5D5D")
        },
        AllPungs => Fixture {
            exposed: &["chow:1C"],
            ..Fixture::new(pattern, "3C3C3C5B5B5B7D7D7D9D9D")
        },
        HalfFlush => Fixture::new(pattern, "1C2C3C4C5C6C7C8C9C2C3C4C5C5C"),
        MixedShiftedChows => Fixture::new(pattern, "2C3C4C2B3B4B4D5D6DWNWNWN5C5C"),
        AllTypes => Fixture::new(pattern, "1C2C3C1B2B3B1D2D3D4D5D6DDRDR"),
        MeldedHand => Fixture {
            exposed: &["chow:1C", "pung:5B", "chow:4C", "pung:WN"],
            self_drawn: true,
            ..Fixture::new(pattern, "9D9D")
        },
        OutsideHand => Fixture::new(pattern, "1C2C3C4B5B6B1D1D1D9C9C9CWEWE"),
        FullyConcealedHand => Fixture::new(pattern, "1C2C3C4C5C6C7C8C9C1B1B1B5D5D"),
        AllChows => Fixture::new(pattern, "1C2C3C4C5C6C1B2B3B5D6D7DWEWE"),
        AllSimples => Fixture::new(pattern, "2C3C4C5C6C7C2B3B4B5D5D5D9D9D"),
        DragonPung => Fixture::new(pattern, "WEWEWE1C2C3C4C5C6C7B8B9B5D5D"),
        ConcealedHand => Fixture {
            exposed: &["chow:1C"],
            ..Fixture::new(pattern, "4C5C6C7B8B9B1D1D1DWWWW")
        },
        SelfDrawn => Fixture {
            self_drawn: false,
            exposed: &["chow:1C"],
            ..Fixture::new(pattern, "4C5C6C7B8B9B1D1D1DWWWW")
        },
    }
}

#[test]
fn every_pattern_has_a_positive_fixture() {
    for &pattern in &mcr::scoring::ALL_PATTERNS {
        let fx = positive(pattern);
        assert!(
            fx.matches(),
            "{pattern} not matched by its positive fixture (result: {:?})",
            fx.result()
        );
    }
}

#[test]
fn every_pattern_has_a_near_miss_fixture() {
    for &pattern in &mcr::scoring::ALL_PATTERNS {
        let fx = near_miss(pattern);
        assert!(
            !fx.matches(),
            "{pattern} unexpectedly matched by its near-miss fixture (result: {:?})",
            fx.result()
        );
    }
}

#[test]
fn totals_equal_sum_of_matched_points() {
    for &pattern in &mcr::scoring::ALL_PATTERNS {
        if let Some(r) = positive(pattern).result() {
            assert_eq!(r.total, r.matched.iter().map(|&(_, p)| p).sum::<u32>());
        }
    }
}
