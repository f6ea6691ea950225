use autonomy::genericity::sample_matrix;
use autonomy::{buchberger, MonomialOrder, SampleSpec};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;
use num_bigint;

fn main() {
    let spec = SampleSpec {
        n: 3, k: 2, rows: 3, degree_bound: 1,
        coeff_low: -5, coeff_high: 5, density: 1.0, seed: 42,
    };
    for trial in 0..3u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        rng.set_stream(trial);
        let m = sample_matrix(&spec, &mut rng);
        let minors: Vec<_> = m
            .maximal_minors()
            .into_iter()
            .filter(|p| !p.is_zero())
            .map(|p| p.primitive_part())
            .collect();
        println!(
            "trial {trial}: {} minors, term counts {:?}, degrees {:?}",
            minors.len(),
            minors.iter().map(|p| p.num_terms()).collect::<Vec<_>>(),
            minors.iter().map(|p| p.degree()).collect::<Vec<_>>()
        );
        let t = Instant::now();
        let ideal = autonomy::LaurentIdeal::from_gens(3, minors.clone());
        println!(
            "  ideal: proper={} dim={} in {:?}",
            ideal.is_proper(),
            if ideal.is_proper() { ideal.torus_dimension() as i64 } else { -1 },
            t.elapsed()
        );
        let t = Instant::now();
        let sat = ideal.saturated_basis();
        println!("  sat(lazy): {} gens in {:?}", sat.gens().len(), t.elapsed());
        let t = Instant::now();
        let gb = buchberger(&minors, MonomialOrder::GrevLex);
        println!("  gb: {} gens in {:?}", gb.gens().len(), t.elapsed());
        for g in gb.gens() {
            let bits = g
                .terms()
                .map(|(_, c)| c.numer().bits().max(c.denom().bits()))
                .max()
                .unwrap_or(0);
            println!("    gen: {} terms, deg {:?}, max coeff bits {}", g.num_terms(), g.degree(), bits);
        }
        let t = Instant::now();
        let product = autonomy::LaurentPoly::term(
            autonomy::Monomial::new(vec![1, 1, 1]),
            autonomy::Rational::from(num_bigint::BigInt::from(1)),
        );
        let _ = &product;
        // extended-ideal route: adjoin u with u*s1*s2*s3 = 1 and take a plain
        // grevlex basis in 4 variables
        let dim4 = 4usize;
        let mut ext: Vec<autonomy::LaurentPoly> = minors
            .iter()
            .map(|g| {
                autonomy::LaurentPoly::from_terms(
                    dim4,
                    g.terms().map(|(m, c)| {
                        let mut e = m.exponents().to_vec();
                        e.push(0);
                        (autonomy::Monomial::new(e), c.clone())
                    }),
                )
            })
            .collect();
        ext.push(autonomy::LaurentPoly::from_terms(
            dim4,
            [
                (autonomy::Monomial::new(vec![1, 1, 1, 1]), autonomy::Rational::from(num_bigint::BigInt::from(1))),
                (autonomy::Monomial::new(vec![0, 0, 0, 0]), autonomy::Rational::from(num_bigint::BigInt::from(-1))),
            ],
        ));
        let ext_gb = buchberger(&ext, MonomialOrder::GrevLex);
        println!(
            "  ext-grevlex: {} gens in {:?}, unit={} dim={}",
            ext_gb.gens().len(),
            t.elapsed(),
            ext_gb.is_unit_ideal(),
            if ext_gb.is_unit_ideal() { 999 } else { ext_gb.dimension() }
        );
    }
}
