mod common;

use common::*;
use hvs_core::classify::{
    algebraicity_obstructions, connected_sum, transform_mirror, transform_reverse, Obstruction, Sign,
};
use hvs_core::seifert::SeifertMatrix;

#[test]
fn trefoil_table() {
    let hn = h_numbers(&seifert(&TREFOIL));
    assert_eq!(hn.p(&mu(1), 1, Sign::Minus), 1);
    assert_eq!(hn.p(&mu(0), 1, Sign::Plus), 1);
    assert_eq!(hn.p.len(), 2);
    assert!(hn.q.is_empty());
    assert!(algebraicity_obstructions(&hn).is_empty());
}

#[test]
fn eight_twenty_table() {
    let hn = h_numbers(&seifert(&EIGHT_TWENTY));
    assert_eq!(hn.p(&mu(0), 2, Sign::Plus), 1);
    assert_eq!(hn.p(&mu(1), 2, Sign::Plus), 1);
    assert_eq!(hn.p.len(), 2);
    assert!(algebraicity_obstructions(&hn).is_empty());
}

#[test]
fn twist_links() {
    for n in [1i64, 2, 3] {
        let pos = h_numbers(&seifert(&[[n]]));
        assert_eq!(pos.p(&one(), 1, Sign::Minus), 1, "n = {}", n);
        assert_eq!(pos.p.len(), 1);
        assert_eq!(algebraicity_obstructions(&pos), vec![Obstruction::NegativeAtOne]);
        let neg = h_numbers(&seifert(&[[-n]]));
        assert_eq!(neg.p(&one(), 1, Sign::Plus), 1, "n = {}", -n);
        assert_eq!(neg.p.len(), 1);
    }
    assert_eq!(h_numbers(&seifert(&[[1]])), h_numbers(&seifert(&[[2]])));
}

#[test]
fn ten_99_and_12n106() {
    let hn = h_numbers(&seifert(&TEN_99));
    for i in 0..2 {
        for u in Sign::both() {
            assert_eq!(hn.p(&mu(i), 2, u), 1);
        }
    }
    assert_eq!(hn.p.len(), 4);
    let hn = h_numbers(&seifert(&TWELVE_N106));
    assert_eq!(hn.p(&mu(0), 4, Sign::Minus), 1);
    assert_eq!(hn.p(&mu(1), 4, Sign::Minus), 1);
    assert_eq!(hn.p.len(), 2);
    assert!(algebraicity_obstructions(&hn).iter().any(|o| matches!(o, Obstruction::LargeBlock { k: 4, .. })));
}

#[test]
fn twelve_crossing_size_three() {
    for s in [chiral(&TWELVE_N508_TABLE), chiral(&TWELVE_N666_TABLE)] {
        let hn = h_numbers(&s);
        for k in [1, 3] {
            assert_eq!(hn.p(&mu(0), k, Sign::Minus), 1);
            assert_eq!(hn.p(&mu(1), k, Sign::Plus), 1);
        }
        assert_eq!(hn.p.len(), 4);
    }
    let hn = h_numbers(&chiral(&TWELVE_N604_TABLE));
    for k in [1, 3] {
        assert_eq!(hn.p(&mu(0), k, Sign::Plus), 1);
        assert_eq!(hn.p(&mu(1), k, Sign::Minus), 1);
    }
    assert_eq!(hn.p.len(), 4);
}

#[test]
fn tabulated_chirality_is_mirrored() {
    let hn = h_numbers(&seifert(&TWELVE_N604_TABLE));
    for k in [1, 3] {
        assert_eq!(hn.p(&mu(0), k, Sign::Minus), 1);
        assert_eq!(hn.p(&mu(1), k, Sign::Plus), 1);
    }
}

#[test]
fn figure_eight_is_amphichiral() {
    let s = seifert(&FIGURE_EIGHT);
    let hn = h_numbers(&s);
    assert!(hn.p.is_empty());
    assert_eq!(hn.q.len(), 1);
    assert_eq!(transform_mirror(&hn), hn);
    assert_eq!(h_numbers(&s.mirror()), hn);
}

#[test]
fn transforms_match_recomputation() {
    let s = seifert(&TREFOIL);
    let hn = h_numbers(&s);
    let mirror = h_numbers(&s.mirror());
    assert_eq!(transform_mirror(&hn), mirror);
    assert_eq!(transform_mirror(&transform_mirror(&hn)), hn);
    assert_eq!(transform_reverse(&hn), h_numbers(&s.reverse()));
    let double = h_numbers(&s.connected_sum(&s));
    assert_eq!(connected_sum(&hn, &hn), double);
    assert_eq!(double.p(&mu(0), 1, Sign::Plus), 2);
    let empty = h_numbers(&SeifertMatrix::from_ints::<[i64; 0]>(&[]));
    assert_eq!(connected_sum(&hn, &empty), hn);
}

#[test]
fn three_left_one_right_trefoil() {
    let right = seifert(&TREFOIL);
    let left = right.mirror();
    let sum = left.connected_sum(&left).connected_sum(&left).connected_sum(&right);
    let hn = h_numbers(&sum);
    assert_eq!(hn.p(&mu(0), 1, Sign::Minus), 3);
    assert_eq!(hn.p(&mu(0), 1, Sign::Plus), 1);
    assert_eq!(hn.p(&mu(1), 1, Sign::Plus), 3);
    assert_eq!(hn.p(&mu(1), 1, Sign::Minus), 1);
    assert_ne!(hn, h_numbers(&chiral(&TWELVE_N508_TABLE)));
}
