use gfl_core::hilbert::{default_dmax, froberg_series, hilbert_function};
use gfl_core::{IdealSpec, Recipe, DEFAULT_PRIMES};

fn predicted(n: usize, degrees: &[u32], dmax: u32) -> Vec<u64> {
    let mut out = Vec::new();
    let mut dead = false;
    for c in froberg_series(n, degrees, dmax as usize).to_i64_vec() {
        dead |= c <= 0;
        out.push(if dead { 0 } else { c as u64 });
    }
    out.resize(dmax as usize + 1, 0);
    out
}

#[test]
fn stanley_attains_series_in_two_and_three_variables() {
    for n in 2..=3usize {
        for code in 0..4u32.pow(n as u32 + 1) {
            let degrees: Vec<u32> = (0..=n).map(|i| code / 4u32.pow(i as u32) % 4 + 1).collect();
            let dmax = default_dmax(n, &degrees).unwrap();
            let spec = IdealSpec::new(n, Recipe::Stanley { degrees: degrees.clone() });
            assert_eq!(hilbert_function(&spec, dmax).unwrap(), predicted(n, &degrees, dmax), "{degrees:?}");
        }
    }
}

// (x - y) h_d = x^{d+1} - y^{d+1}, so (x^3, y^3, h_2) = (x^3, h_2).
#[test]
fn gottlieb_collapses_when_powers_share_degree_one_above() {
    for &p in &DEFAULT_PRIMES {
        let spec = IdealSpec::new(2, Recipe::Gottlieb { degrees: vec![3, 3, 2] }).with_prime(p);
        assert_eq!(hilbert_function(&spec, 5).unwrap(), vec![1, 2, 2, 1, 0, 0]);
        let ci = IdealSpec::new(2, Recipe::Gottlieb { degrees: vec![3, 9, 2] }).with_prime(p);
        assert_eq!(hilbert_function(&ci, 5).unwrap(), vec![1, 2, 2, 1, 0, 0]);
    }
    assert_eq!(predicted(2, &[3, 3, 2], 5), vec![1, 2, 2, 0, 0, 0]);
}

#[test]
fn gottlieb_matches_when_last_degree_is_small() {
    for degrees in [vec![2, 2, 1], vec![2, 3, 2], vec![4, 4, 2], vec![2, 2, 2, 2]] {
        let n = degrees.len() - 1;
        let dmax = default_dmax(n, &degrees).unwrap();
        let spec = IdealSpec::new(n, Recipe::Gottlieb { degrees: degrees.clone() });
        assert_eq!(hilbert_function(&spec, dmax).unwrap(), predicted(n, &degrees, dmax), "{degrees:?}");
    }
}
