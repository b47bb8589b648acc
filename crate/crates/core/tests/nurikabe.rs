mod common;

use std::collections::HashSet;

use common::*;
use num_bigint::BigUint;
use ziggu_core::nurikabe::{
    nurikabe_counts, reflection_check, rho, sigma, sigma_inverse, Column, NurikabeGrid,
};
use ziggu_core::oracle::enumerate_nurikabe;
use ziggu_core::{listing, ListingKind, QuatString};

fn a(n: usize) -> usize {
    6 * (1 << n) - 3 * n - 5
}

#[test]
fn validity_matches_flood_fill() {
    for n in 0..=6 {
        for m in 0..1u32 << (2 * n) {
            let cols: Vec<Column> = (0..n).map(|j| Column::ALL[(m >> (2 * j) & 3) as usize]).collect();
            let top: Vec<bool> = cols.iter().map(|c| c.top).collect();
            let bottom: Vec<bool> = cols.iter().map(|c| c.bottom).collect();
            assert_eq!(NurikabeGrid::new(cols).is_valid(), grid_ok(&top, &bottom));
        }
    }
}

#[test]
fn grid_counts() {
    for n in 0..=10 {
        assert_eq!(enumerate_nurikabe(n).unwrap().len(), a(n), "n={n}");
    }
    for n in 0..=7 {
        assert_eq!(grid_count(n), a(n), "n={n}");
    }
    assert_eq!(enumerate_nurikabe(3).unwrap().len(), 34);
    assert!(enumerate_nurikabe(13).is_err());
}

#[test]
fn partition_counts() {
    for n in 0..=10 {
        let grids = enumerate_nurikabe(n).unwrap();
        let b = grids.iter().filter(|g| g.all_columns_black()).count();
        let c = grids.len() - b;
        let (ea, eb, ec) = nurikabe_counts(n);
        assert_eq!(ea, BigUint::from(grids.len()));
        assert_eq!(eb, BigUint::from(b), "n={n}");
        assert_eq!(ec, BigUint::from(c), "n={n}");
        if n >= 1 {
            assert_eq!(b, 3 << (n - 1));
            assert_eq!(c, (9 << (n - 1)) - 3 * n - 5);
        }
    }
}

#[test]
fn sigma_is_a_bijection() {
    for n in 1..=8 {
        let grids: HashSet<NurikabeGrid> = enumerate_nurikabe(n).unwrap().into_iter().collect();
        let mut image = HashSet::new();
        for w in listing(ListingKind::Short, n).unwrap().states {
            let g = sigma(&w).unwrap();
            assert!(g.is_valid(), "{w}");
            assert_eq!(sigma_inverse(&g).unwrap(), w);
            assert!(image.insert(g), "{w} collides");
        }
        assert_eq!(image, grids, "n={n}");
    }
}

#[test]
fn sigma_inverse_round_trips_every_grid() {
    for n in 1..=8 {
        for g in enumerate_nurikabe(n).unwrap() {
            let w = sigma_inverse(&g).unwrap();
            assert!(w.is_ziggu());
            assert_eq!(sigma(&w).unwrap(), g);
        }
    }
}

#[test]
fn reflection() {
    for n in 1..=6 {
        for w in listing(ListingKind::Short, n).unwrap().states {
            assert!(reflection_check(&w).unwrap(), "{w}");
            assert_eq!(rho(&rho(&w).unwrap()).unwrap(), w);
        }
    }
}

#[test]
fn fixed_images() {
    let g = |s: &str| s.parse::<NurikabeGrid>().unwrap();
    let q = |s: &str| s.parse::<QuatString>().unwrap();
    assert_eq!(sigma(&q("333")).unwrap(), g("...\n..."));
    assert_eq!(sigma_inverse(&g("....\n....")).unwrap(), q("3333"));
    assert!(sigma(&q("102")).is_err());
    assert!(sigma_inverse(&g("##\n##")).is_err());
    assert!(sigma_inverse(&g("#.#\n#.#")).is_err());
}

#[test]
fn grid_text_and_json() {
    let g: NurikabeGrid = "##.\n#..".parse().unwrap();
    assert_eq!(g.to_string(), "##.\n#..");
    let j = serde_json::to_string(&g).unwrap();
    assert_eq!(j, r###"["##.","#.."]"###);
    assert_eq!(serde_json::from_str::<NurikabeGrid>(&j).unwrap(), g);
    assert!("#x\n##".parse::<NurikabeGrid>().is_err());
    assert!("#\n##".parse::<NurikabeGrid>().is_err());
}
