use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use repchar::frobenius::alt_character;
use repchar::laurent::{LaurentPoly, Monomial, NVARS, U_SLOT};
use repchar::oracle::{direct_alt_character, direct_sector_trace, FockBasis, WeightedRep};
use repchar::weyl_b4::{character, DynkinLabel};

fn random_rep(rng: &mut ChaCha8Rng) -> WeightedRep {
    let size = rng.gen_range(1..=8);
    WeightedRep::new(
        (0..size)
            .map(|_| {
                let mut e = [0i64; NVARS];
                for x in &mut e {
                    *x = rng.gen_range(-2..=2);
                }
                Monomial::new(e)
            })
            .collect(),
    )
}

#[test]
fn generating_function_identity() {
    // sum_n t^n Alt_n = prod_w (1 + t w), with t carried by a spare power
    // of u large enough not to collide with the weights.
    let t = |n: i64| LaurentPoly::var(U_SLOT, 100 * n);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let rep = random_rep(&mut rng);
        let lhs = (0..=rep.len()).fold(LaurentPoly::zero(), |acc, n| {
            &acc + &(&t(n as i64) * &direct_alt_character(&rep, n).unwrap())
        });
        let rhs = rep.weights().iter().fold(LaurentPoly::one(), |acc, w| {
            &acc * &(&LaurentPoly::one() + &(&t(1) * &LaurentPoly::term(*w, 1)))
        });
        assert_eq!(lhs, rhs);
        assert!(direct_alt_character(&rep, rep.len() + 1).unwrap().is_zero());
    }
}

#[test]
fn frobenius_agrees_with_enumeration_for_random_reps() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..20 {
        let rep = random_rep(&mut rng);
        for n in 0..=rep.len() {
            assert_eq!(
                alt_character(&rep.character(), n as u32, false).unwrap(),
                direct_alt_character(&rep, n).unwrap()
            );
        }
    }
}

#[test]
fn spinor_weights_reproduce_the_weyl_character() {
    let spinor = WeightedRep::so9_spinor();
    assert_eq!(spinor.character(), *character(DynkinLabel::SPINOR).unwrap());
    let spinor_char = character(DynkinLabel::SPINOR).unwrap();
    assert_eq!(
        direct_alt_character(&spinor, 2).unwrap(),
        alt_character(&spinor_char, 2, false).unwrap()
    );
}

#[test]
fn sector_sizes_sum_to_full_fock_space() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..5 {
        let rep = random_rep(&mut rng);
        let sectors = direct_sector_trace(rep.len() as i64, &rep).unwrap();
        let total: BigInt = sectors.iter().map(|s| s.evaluate_at_identity()).sum();
        assert_eq!(total, BigInt::from(1u64 << rep.len()));
    }
}

/// Three complex modes built from a two-component spinor and the three
/// gauge directions: one neutral mode and a charged pair, eight states in
/// all. The brute-force trace must factor into the neutral block times the
/// charged sectors, with and without the `(-1)^F` insertion.
#[test]
fn toy_model_reconstruction() {
    // Spinor weights in quarter units so the neutral vacuum is integral.
    let doublet = WeightedRep::new(vec![Monomial::z([2, 0, 0, 0]), Monomial::z([-2, 0, 0, 0])]);
    let m_pairs = 1;
    let neutral_op = Monomial::z([2, 0, 0, 0]);
    let neutral_vacuum = Monomial::z([-1, 0, 0, 0]);
    let charged_ops: Vec<Monomial> = doublet
        .weights()
        .iter()
        .map(|w| *w * Monomial::u(-1))
        .collect();

    let mut all_ops = vec![neutral_op];
    all_ops.extend(&charged_ops);
    let full = FockBasis::new(neutral_vacuum * Monomial::u(m_pairs), &all_ops).unwrap();
    assert_eq!(full.len(), 8);
    assert_eq!(
        full.character(false).evaluate_at_identity(),
        BigInt::from(8)
    );

    let neutral = FockBasis::new(neutral_vacuum, &[neutral_op]).unwrap();
    let doublet_char = doublet.character();
    for twisted in [false, true] {
        let charged = (0..=doublet.len()).fold(LaurentPoly::zero(), |acc, n| {
            let sign = if twisted && n % 2 == 1 { -1 } else { 1 };
            let alt = alt_character(&doublet_char, n as u32, false).unwrap();
            let term = &LaurentPoly::var(U_SLOT, m_pairs - n as i64) * &alt;
            &acc + &term.scale(&BigInt::from(sign))
        });
        assert_eq!(
            full.character(twisted),
            &neutral.character(twisted) * &charged,
            "twisted = {twisted}"
        );
    }
}
