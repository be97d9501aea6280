//! Randomized algebra properties: ring laws for Laurent polynomials,
//! rank/kernel/inverse behavior of exact matrices, cross-multiplication in
//! k(q), and parser robustness under mutation.

use khsplit_core::exact::{rat, Laurent, Matrix, QMatrix, RatFunc};
use khsplit_core::format::{parse_cut, parse_diagram, serialize_cut, serialize_diagram};
use proptest::prelude::*;

fn laurent_strategy() -> impl Strategy<Value = Laurent> {
    prop::collection::vec(((-6i64..=6), (-9i64..=9)), 0..6)
        .prop_map(|terms| Laurent::from_terms(terms.into_iter().map(|(e, c)| (e, rat(c)))))
}

fn qmatrix_strategy(rows: usize, cols: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(-9i64..=9, rows * cols).prop_map(move |v| {
        let mut m = Matrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, rat(v[i * cols + j]));
            }
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_distributes(p in laurent_strategy(), q in laurent_strategy(), r in laurent_strategy()) {
        let lhs = &(&p + &q) * &r;
        let rhs = &(&p * &r) + &(&q * &r);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn laurent_mul_commutes(p in laurent_strategy(), q in laurent_strategy()) {
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn laurent_div_rem_reconstructs(p in laurent_strategy(), q in laurent_strategy()) {
        prop_assume!(!q.is_zero());
        let (quot, rem) = p.div_rem(&q);
        prop_assert_eq!(&(&quot * &q) + &rem, p);
    }

    #[test]
    fn rank_equals_transpose_rank(m in qmatrix_strategy(4, 5)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kernel_dimension_theorem(m in qmatrix_strategy(3, 6)) {
        let (rank, kernel) = m.rank_and_kernel();
        prop_assert_eq!(rank + kernel.len(), 6);
        for v in &kernel {
            let image = m.apply(v);
            prop_assert!(image.iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn inverse_round_trips(m in qmatrix_strategy(4, 4)) {
        if let Ok(inv) = m.invert() {
            prop_assert_eq!(m.mul(&inv), Matrix::identity(4));
            prop_assert_eq!(inv.mul(&m), Matrix::identity(4));
        }
    }

    #[test]
    fn parser_never_panics_on_noise(s in "[ -~\n]{0,200}") {
        let _ = parse_diagram(&s);
        let _ = parse_cut(&s);
    }

    #[test]
    fn parser_rejects_line_deletions_gracefully(
        entry in 0usize..4,
        line in 0usize..12,
    ) {
        // drop one line from a valid file: the parser must return an error
        // or a diagram, never panic
        let texts = [
            serialize_diagram(&khsplit_core::catalog::hopf()),
            serialize_diagram(&khsplit_core::catalog::trefoil()),
            serialize_cut(&khsplit_core::catalog::solomon_cut()),
            serialize_cut(&khsplit_core::catalog::hopf_connected_sum()),
        ];
        let text = &texts[entry];
        let lines: Vec<&str> = text.lines().collect();
        prop_assume!(line < lines.len());
        let mutated: String = lines
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != line)
            .map(|(_, l)| format!("{}\n", l))
            .collect();
        let _ = parse_diagram(&mutated);
        let _ = parse_cut(&mutated);
    }

    #[test]
    fn rational_fn_cross_multiplication(
        a in laurent_strategy(),
        b in laurent_strategy(),
        c in laurent_strategy(),
        d in laurent_strategy(),
    ) {
        prop_assume!(!b.is_zero() && !d.is_zero());
        let lhs = {
            let x = RatFunc::new(a.clone(), b.clone()).unwrap();
            let y = RatFunc::new(c.clone(), d.clone()).unwrap();
            &x + &y
        };
        let rhs = RatFunc::new(&(&a * &d) + &(&c * &b), &b * &d).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
