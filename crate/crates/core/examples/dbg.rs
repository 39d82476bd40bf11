use std::time::Instant;
use germcalc_core::geometry::FormDrawer;
use germcalc_core::invariants::milnor_hypersurface;
use germcalc_core::ring::*;
use germcalc_core::sbasis::InvariantValue;

fn unimodular(seed: u64, n: usize) -> Vec<Vec<Coeff>> {
    let mut m: Vec<Vec<Coeff>> = (0..n)
        .map(|i| (0..n).map(|j| coeff_int(i64::from(i == j))).collect())
        .collect();
    let mut drawer = FormDrawer::new(seed, 17, 2);
    for _ in 0..4 {
        let v = drawer.draw(3);
        let c = v.coeffs()[0].clone();
        let i = (v.coeffs()[1].numer().magnitude().to_u32_digits().first().copied().unwrap_or(0) as usize) % n;
        let j = (v.coeffs()[2].numer().magnitude().to_u32_digits().first().copied().unwrap_or(0) as usize) % n;
        if i == j { continue; }
        for row in 0..n {
            let add = &m[row][j] * &c;
            m[row][i] = &m[row][i] + &add;
        }
    }
    m
}

fn main() {
    let names: Vec<String> = vec!["x".into(), "y".into(), "z".into()];
    let f = parse_polynomial("x^5 + y^5 + z^5", &names).unwrap();
    for seed in [1u64, 2, 3] {
        let u = unimodular(seed, 3);
        let g = f.substitute_linear(&u);
        let t = Instant::now();
        let mu = milnor_hypersurface(&g, 3).unwrap();
        eprintln!("seed {seed}: mu = {mu} in {:?} ({} terms)", t.elapsed(), g.num_terms());
        assert_eq!(mu, InvariantValue::Finite(64));
    }
}
