use proptest::prelude::*;
use zollstock::base_algebra::BaseOperad;
use zollstock::mtilde::{MTilde, MTildeElement};
use zollstock::perm::{all_perms, Perm};
use zollstock::poly::{enumerate_increasing_maps, pullback, pushforward, scalar};
use zollstock::ring_r::decode_rd;
use zollstock::rt0::{concatenate, monomials_of_degree, q_k};
use zollstock::super_operad::{basis_tuples, es_permute, pair, SuperSpace, SuperTensor};
use zollstock::verify::{koszul_sign, monomials_up_to, morphism_f_checks};
use zollstock::{Monomial, Polynomial, RElement, RT0Element};

fn poly(vars: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, vars), -3i64..=3), 0..5).prop_map(|terms| {
        Polynomial::from_terms(terms.into_iter().map(|(e, c)| (scalar(c), Monomial::from_exponents(e))))
    })
}

fn r_element(max_degree: u32) -> impl Strategy<Value = RElement> {
    let pool: Vec<Monomial> = (0..=max_degree)
        .flat_map(monomials_of_degree)
        .filter(|m| m.t0_exponent() == 0)
        .collect();
    prop::collection::vec((0..pool.len(), -3i64..=3), 1..4).prop_map(move |picks| {
        let p = Polynomial::from_terms(picks.into_iter().map(|(i, c)| (scalar(c), pool[i].clone())));
        RElement::from_polynomial(&p).unwrap()
    })
}

fn monomial(max_degree: u32) -> impl Strategy<Value = Monomial> {
    let pool = monomials_up_to(max_degree);
    (0..pool.len()).prop_map(move |i| pool[i].clone())
}

fn rt0(max_degree: u32) -> impl Strategy<Value = RT0Element> {
    prop::collection::vec((monomial(max_degree), -2i64..=2), 1..3).prop_map(|terms| {
        let p = Polynomial::from_terms(terms.into_iter().map(|(m, c)| (scalar(c), m)));
        RT0Element::from_polynomial(&p).unwrap()
    })
}

fn elem(m: &Monomial) -> RT0Element {
    RT0Element::from_monomial(m).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn polynomial_ring_laws(a in poly(4), b in poly(4), c in poly(4)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &Polynomial::one(), a);
    }

    #[test]
    fn push_and_pull_are_homomorphisms(p in poly(3), q in poly(3), k in 0usize..6) {
        let maps = enumerate_increasing_maps(2, 4);
        let alpha = &maps[k % maps.len()];
        let push = |x: &Polynomial| pushforward(alpha, x).unwrap();
        prop_assert_eq!(push(&(&p * &q)), &push(&p) * &push(&q));
        prop_assert_eq!(push(&(&p + &q)), &push(&p) + &push(&q));
        prop_assert_eq!(pullback(alpha, &push(&p)).unwrap(), p.clone());
        let wide = pushforward(&maps[0], &p).unwrap();
        let wide_q = pushforward(&maps[0], &q).unwrap();
        let pull = |x: &Polynomial| pullback(alpha, x).unwrap();
        prop_assert_eq!(pull(&(&wide * &wide_q)), &pull(&wide) * &pull(&wide_q));
    }

    #[test]
    fn r_mul_is_commutative_and_associative(f in r_element(2), g in r_element(2), h in r_element(2)) {
        prop_assert_eq!(f.r_mul(&g), g.r_mul(&f));
        prop_assert_eq!(f.r_mul(&g).r_mul(&h), f.r_mul(&g.r_mul(&h)));
        prop_assert_eq!(f.r_mul(&(&g + &h)), &f.r_mul(&g) + &f.r_mul(&h));
    }

    #[test]
    fn projection_is_a_ring_map_compatible_with_restriction(f in r_element(2), g in r_element(2), d in 1usize..5) {
        let fg = f.r_mul(&g);
        prop_assert_eq!(
            fg.project_to_level(d).value().clone(),
            f.project_to_level(d).value() * g.project_to_level(d).value()
        );
        prop_assert_eq!(
            fg.project_to_level(d).restrict_level().unwrap().value().clone(),
            fg.project_to_level(d - 1).value().clone()
        );
    }

    #[test]
    fn decode_inverts_projection(f in r_element(3)) {
        let d = f.top_index().unwrap_or(0).max(1) + 1;
        prop_assert_eq!(decode_rd(f.project_to_level(d).value(), d).unwrap(), f);
    }

    #[test]
    fn iota_is_an_involutive_dot_homomorphism(x in rt0(3), y in rt0(2)) {
        prop_assert_eq!(x.iota().iota(), x.clone());
        prop_assert_eq!(x.dot_mul(&y).iota(), x.iota().dot_mul(&y.iota()));
    }

    #[test]
    fn iota_reverses_odot(x in rt0(2), y in rt0(2)) {
        prop_assert_eq!(x.odot(&y).iota(), y.iota().odot(&x.iota()));
    }

    #[test]
    fn odot_grading_linearity_and_concatenation(a in monomial(3), b in monomial(3), k in 0u32..3) {
        let z = elem(&a).odot(&elem(&b));
        prop_assert!(z.is_homogeneous());
        prop_assert_eq!(z.degree(), Some(a.degree() + b.degree() + 1));
        prop_assert_eq!(elem(&a).mul_t0_power(k).odot(&elem(&b)), z.mul_t0_power(k));
        if b.t0_exponent() == 0 {
            prop_assert_eq!(z, elem(&concatenate(&a, &b)));
        }
    }

    #[test]
    fn q_tower_is_compatible(a in monomial(3), b in monomial(3), k in 1usize..6) {
        prop_assert_eq!(q_k(&a, &b, k + 1).set_var_zero(k + 1), q_k(&a, &b, k));
    }

    #[test]
    fn es_permute_matches_inversion_sign(t in prop::collection::vec(0usize..3, 2..5), seed in 0usize..120, seed2 in 0usize..120) {
        let space = SuperSpace::standard(3).unwrap();
        let perms = all_perms(t.len());
        let pi = &perms[seed % perms.len()];
        let sigma = &perms[seed2 % perms.len()];
        let v = SuperTensor::basis(t.clone());
        let got = es_permute(&space, pi, &v).unwrap();
        let inv = pi.inverse();
        let moved: Vec<usize> = (0..t.len()).map(|i| t[inv.apply(i)]).collect();
        let want = SuperTensor::from_terms(t.len(), [(moved, koszul_sign(&space, pi, &t))]).unwrap();
        prop_assert_eq!(&got, &want);
        let twice = es_permute(&space, pi, &es_permute(&space, sigma, &v).unwrap()).unwrap();
        prop_assert_eq!(twice, es_permute(&space, &pi.compose(sigma), &v).unwrap());
    }

    #[test]
    fn pairing_is_permutation_invariant(v in prop::collection::vec(0usize..3, 3), a in prop::collection::vec(0usize..3, 3), s in 0usize..6) {
        let space = SuperSpace::standard(3).unwrap();
        let even = |t: &[usize]| t.iter().map(|&i| space.parity(i)).sum::<u8>() % 2 == 0;
        prop_assume!(even(&v) && even(&a));
        let pi = &all_perms(3)[s];
        let (v, a) = (SuperTensor::basis(v), SuperTensor::basis(a));
        let moved = pair(&space, &es_permute(&space, pi, &v).unwrap(), &es_permute(&space, pi, &a).unwrap()).unwrap();
        prop_assert_eq!(pair(&space, &v, &a).unwrap(), moved);
    }

    #[test]
    fn repeated_unary_insertion_is_odot(g in monomial(1), h in monomial(1), slot in 0usize..3, j in 1usize..3) {
        let base = BaseOperad::trivial();
        let op = MTilde::new(&base);
        let mut slots = vec![Polynomial::one(); 3];
        slots[slot] = Polynomial::var(1);
        let s = MTildeElement::stable(0, &slots).unwrap();
        let (g, h) = (elem(&g), elem(&h));
        let twice = op
            .compose(&op.compose(&s, &MTildeElement::unary(g.clone()), j).unwrap(), &MTildeElement::unary(h.clone()), j)
            .unwrap();
        let once = op.compose(&s, &MTildeElement::unary(g.odot(&h)), j).unwrap();
        prop_assert_eq!(twice, once);
    }
}

#[test]
fn morphism_f_on_trivial_base() {
    for c in morphism_f_checks(&BaseOperad::trivial(), 3).unwrap() {
        assert!(c.pass, "{c:?}");
    }
}

#[test]
fn es_permute_rejects_wrong_length() {
    let space = SuperSpace::standard(2).unwrap();
    assert!(es_permute(&space, &Perm::identity(3), &SuperTensor::basis(vec![0, 1])).is_err());
    assert_eq!(basis_tuples(2, 2).len(), 4);
}
