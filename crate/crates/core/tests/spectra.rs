mod common;

use common::*;
use hvs_core::algebra::Real;
use hvs_core::seifert::SeifertMatrix;
use hvs_core::spectra::*;
use num_rational::BigRational;

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

fn exact(p: i64, d: i64) -> Real {
    Real::Exact(q(p, d))
}

/// {i/p + j/q : 1 ≤ i < p, 1 ≤ j < q} with multiplicities, sorted.
fn torus_spectrum(p: i64, qq: i64) -> Vec<(BigRational, usize)> {
    let mut v: Vec<(BigRational, usize)> = Vec::new();
    for i in 1..p {
        for j in 1..qq {
            let a = q(i, p) + q(j, qq);
            match v.iter_mut().find(|(b, _)| *b == a) {
                Some(e) => e.1 += 1,
                None => v.push((a, 1)),
            }
        }
    }
    v.sort();
    v
}

fn sorted_sp(s: &SeifertMatrix) -> Vec<(BigRational, usize)> {
    let sd = spectrum(&h_numbers(s));
    assert!(sd.isp.is_empty());
    let mut v = sd.rational_sp();
    assert_eq!(v.len(), sd.sp.len(), "all spectral numbers should be exact");
    v.sort();
    v
}

#[test]
fn trefoil_spectrum() {
    assert_eq!(sorted_sp(&seifert(&TREFOIL)), vec![(q(5, 6), 1), (q(7, 6), 1)]);
    assert_eq!(sorted_sp(&seifert(&TREFOIL).mirror()), vec![(q(1, 6), 1), (q(11, 6), 1)]);
}

#[test]
fn torus_knot_spectra() {
    for (p, qq) in [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5)] {
        let s = SeifertMatrix::torus(p, qq).unwrap();
        assert_eq!(sorted_sp(&s), torus_spectrum(p as i64, qq as i64), "T({},{})", p, qq);
    }
}

#[test]
fn torus_generator_matches_trefoil() {
    assert_eq!(h_numbers(&SeifertMatrix::torus(2, 3).unwrap()), h_numbers(&seifert(&TREFOIL)));
    assert!(SeifertMatrix::torus(1, 3).is_err());
}

#[test]
fn figure_eight_extended_spectrum() {
    let sd = spectrum(&h_numbers(&seifert(&FIGURE_EIGHT)));
    assert!(sd.sp.is_empty());
    assert_eq!(sd.len(), 2);
    assert_eq!(sd.isp_len(), 2);
    assert!(symmetry_check(&sd).is_empty());
    // positive real eigenvalues: Re z ∈ {1, 2}
    for (x, y, _) in &sd.isp {
        assert!(x.close_to(&Real::int(1)) || x.close_to(&Real::int(2)), "{}", x.render(10));
        assert!(y.to_f64().abs() > 0.1);
    }
    let c = halfplane_count(&sd, &exact(1, 4));
    assert_eq!((c.inside, c.outside, c.boundary), (1, 1, false));
    assert_eq!(signature_from_extended(&sd, &exact(1, 4)), Some(0));
}

#[test]
fn halfplane_counts_trefoil() {
    let sd = spectrum(&h_numbers(&seifert(&TREFOIL)));
    let c = halfplane_count(&sd, &exact(2, 5));
    assert_eq!((c.inside, c.outside, c.boundary), (2, 0, false));
    let c = halfplane_count(&sd, &exact(1, 10));
    assert_eq!((c.inside, c.outside, c.boundary), (1, 1, false));
    assert_eq!(signature_from_spectrum(&sd, &exact(1, 10)), Some(0));
    assert!(halfplane_count(&sd, &exact(5, 6)).boundary);
    assert!(halfplane_count(&sd, &exact(1, 6)).boundary);
    assert_eq!(signature_from_spectrum(&sd, &exact(2, 5)), Some(-2));
    assert_eq!(signature_from_spectrum(&sd, &exact(1, 6)), None);
}

#[test]
fn symmetry_negative_control() {
    let mut sd = spectrum(&h_numbers(&seifert(&EIGHT_TWENTY)));
    assert!(symmetry_check(&sd).is_empty());
    sd.sp.push((exact(1, 3), 1));
    assert_eq!(symmetry_check(&sd).len(), 1);
}

#[test]
fn spectrum_size_is_alexander_degree() {
    for m in random_matrices(30, 2..=6, 2, 9) {
        let s = SeifertMatrix::new(m).unwrap();
        let sd = spectrum(&h_numbers(&s));
        let tower = hvs_core::invariants::alexander_tower(&s);
        assert_eq!(sd.len(), tower.first_nonzero().degree().unwrap_or(0));
        assert!(symmetry_check(&sd).is_empty());
    }
}

#[test]
fn s_counts() {
    let sd = spectrum(&h_numbers(&SeifertMatrix::torus(3, 4).unwrap()));
    assert_eq!(sd.s(&q(13, 12)), 1);
    assert_eq!(sd.s(&q(1, 2)), 0);
    assert_eq!(sd.sp_len(), 6);
}

#[test]
fn negative_real_pair_is_symmetric() {
    // Δ = 2t² + 5t + 2 up to units: eigenvalues −2 and −1/2
    let sd = spectrum(&h_numbers(&seifert(&[[1, 0], [3, 2]])));
    for (x, _, _) in &sd.isp {
        assert!(x.close_to(&exact(1, 2)) || x.close_to(&exact(3, 2)), "{}", x.render(10));
    }
    assert!(symmetry_check(&sd).is_empty());
}
