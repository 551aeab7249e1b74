//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS or FAIL line.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;

use mvcrystal::demazure::{
    extremal, extremal_on, extremal_vertices, in_demazure, in_opposite_demazure, in_opposite_demazure_fmax,
    in_opposite_demazure_on, in_opposite_demazure_polytopal,
};
use mvcrystal::graph::{generate_binf_truncated, generate_crystal, CrystalGraph};
use mvcrystal::lusztig::tropical_three;
use mvcrystal::oracle::{oracle_demazure_set, oracle_opposite_set, ElementSet, StrataOracle};
use mvcrystal::strata::{check_iota_star, iota, iota_shortcut, kappa, kappa_by_predicate};
use mvcrystal::words::{elements_leq, reduced_words_of_w0};
use mvcrystal::{contains, Base, Coweight, LusztigDatum, ReducedWord, RootDatum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn a2() -> RootDatum {
    RootDatum::parse("A2").unwrap()
}

fn lam() -> Coweight {
    Coweight(vec![1, 1])
}

/// Every `(datum, lambda)` of the sweeps: A2 and A3, coordinates in `{0,1,2}`,
/// crystals of at most 5000 elements.
fn sweep_configs() -> Vec<(RootDatum, Coweight)> {
    let mut out = Vec::new();
    for name in ["A2", "A3"] {
        let d = RootDatum::parse(name).unwrap();
        for l in d.dominant_coweights_in_box(2) {
            if d.weyl_dimension(&l).unwrap() <= 5000 {
                out.push((d.clone(), l));
            }
        }
    }
    out
}

/// Colour-preserving isomorphism that sends the source of `g` to `root` of
/// the expected graph. Crystal graphs have at most one `j`-edge out of a
/// node, so the map is forced by walking from the source.
fn isomorphic_from_source(g: &CrystalGraph, expected: &[(usize, usize, usize)], n: usize, root: usize) -> bool {
    if g.len() != n || g.edges.len() != expected.len() {
        return false;
    }
    let ours: HashMap<(usize, usize), usize> = g.edges.iter().map(|e| ((e.src, e.colour), e.dst)).collect();
    let theirs: HashMap<(usize, usize), usize> = expected.iter().map(|&(s, t, c)| ((s, c), t)).collect();
    let sources = g.sources();
    if sources.len() != 1 {
        return false;
    }
    let mut map = vec![None; n];
    let mut used = vec![false; n];
    map[sources[0]] = Some(root);
    used[root] = true;
    let mut stack = vec![sources[0]];
    while let Some(u) = stack.pop() {
        let mu = map[u].unwrap();
        for c in 0..g.datum.rank() {
            match (ours.get(&(u, c)), theirs.get(&(mu, c))) {
                (None, None) => {}
                (Some(&v), Some(&mv)) => match map[v] {
                    Some(m) if m == mv => {}
                    Some(_) => return false,
                    None => {
                        if used[mv] {
                            return false;
                        }
                        map[v] = Some(mv);
                        used[mv] = true;
                        stack.push(v);
                    }
                },
                _ => return false,
            }
        }
    }
    map.iter().all(Option::is_some)
}

fn criterion_1() {
    let d = a2();
    let g = generate_crystal(&d, &lam()).unwrap();
    assert_eq!(g.len(), 8);
    // Top P, left column B, C, D, bottom E, right column H, G, F (F = f_1^2 f_2 P).
    let (p, b, c, dd, e, f, gg, h) = (0, 1, 2, 3, 4, 5, 6, 7);
    let expected = [
        (p, b, 0),
        (p, h, 1),
        (b, c, 1),
        (c, dd, 1),
        (dd, e, 0),
        (h, gg, 0),
        (gg, f, 0),
        (f, e, 1),
    ];
    assert!(isomorphic_from_source(&g, &expected, 8, p));
    let hi = LusztigDatum::highest(&d, &lam()).unwrap();
    assert!(g.find(&hi.lower_by(&[1, 0, 0]).unwrap()).is_some());
    assert_eq!(g.sinks().len(), 1);
    let lo = LusztigDatum::lowest(&d, &lam()).unwrap();
    assert_eq!(g.find(&lo).unwrap().id, g.sinks()[0]);
}

fn criterion_2() {
    let d = a2();
    let hi = LusztigDatum::highest(&d, &lam()).unwrap();
    let i = ReducedWord::parse(&d, "1,2,1").unwrap();
    let j = ReducedWord::parse(&d, "2,1,2").unwrap();
    let f1 = hi.f(0).unwrap();
    assert_eq!(f1.change_word(&i).unwrap().n(), &[1, 0, 0]);
    assert_eq!(f1.change_word(&j).unwrap().n(), &[0, 0, 1]);
    let f21 = hi.lower_by(&[0, 1]).unwrap();
    assert_eq!(f21.change_word(&i).unwrap().n(), &[0, 1, 0]);
    assert_eq!(f21.change_word(&j).unwrap().n(), &[1, 0, 1]);
    let g = f21.vertices().unwrap();
    let s1_lam = Coweight(vec![0, 1]);
    assert_eq!(s1_lam, d.act_coweight(&d.simple_reflection(0), &lam()));
    let expected = [
        ("1,2,1", lam()),
        ("1,2", lam()),
        ("1", Coweight(vec![0, 0])),
        ("e", Coweight(vec![0, 0])),
        ("2,1", s1_lam.clone()),
        ("2", s1_lam),
    ];
    assert_eq!(g.len(), 6);
    for (w, mu) in expected {
        assert_eq!(g.get(&d.parse_element(w).unwrap()), &mu, "vertex at {w}");
    }
}

fn criterion_3() {
    let d = a2();
    let hi = LusztigDatum::highest(&d, &lam()).unwrap();
    let x = d.parse_element("1,2").unwrap();
    assert!(in_demazure(&hi.f(0).unwrap(), &x).member);
    let f21 = hi.lower_by(&[0, 1]).unwrap();
    assert!(!in_demazure(&f21, &x).member);
    assert!(contains(&extremal(&d, &x, &lam()).unwrap(), &f21).unwrap());
}

fn criterion_4() {
    let d = a2();
    let hi = LusztigDatum::highest(&d, &lam()).unwrap();
    let p = hi.lower_by(&[1, 0, 0]).unwrap();
    let x = d.simple_reflection(0);
    assert!(in_opposite_demazure(&p, &x).unwrap().member);
    assert!(in_opposite_demazure_fmax(&p, &x).unwrap().member);
    assert!(in_opposite_demazure_polytopal(&p, &x).unwrap().member);
    // Not reachable from the extremal polytope by lowering operators.
    let ext = extremal(&d, &x, &lam()).unwrap();
    let mut reach = ElementSet::singleton(&ext);
    loop {
        let next = reach.close_f(0).unwrap().close_f(1).unwrap();
        if next.len() == reach.len() {
            break;
        }
        reach = next;
    }
    assert!(!reach.contains(&p));
}

fn criterion_5() {
    let mut checked = 0usize;
    for (d, l) in sweep_configs() {
        let g = generate_crystal(&d, &l).unwrap();
        let words = reduced_words_of_w0(&d).unwrap();
        let ons: Vec<Vec<LusztigDatum>> = g
            .elements()
            .map(|p| words.iter().map(|w| p.change_word(w).unwrap()).collect())
            .collect();
        for x in d.weyl_group().unwrap().elements() {
            let dem = oracle_demazure_set(&d, x, &l).unwrap();
            let opp = oracle_opposite_set(&d, x, &l).unwrap();
            let v = d.mul(x, d.longest());
            let split = v.length();
            let through: Vec<bool> = words
                .iter()
                .map(|w| d.element_from_word(&w.letters()[..split]).unwrap() == v)
                .collect();
            for (p, on) in g.elements().zip(&ons) {
                let in_dem = dem.contains(p);
                assert_eq!(in_demazure(p, x).member, in_dem, "{} {l} x={x:?} {p:?}", d.name());
                let in_opp = opp.contains(p);
                assert_eq!(in_opposite_demazure(p, x).unwrap().member, in_opp);
                assert_eq!(in_opposite_demazure_fmax(p, x).unwrap().member, in_opp);
                assert_eq!(in_opposite_demazure_polytopal(p, x).unwrap().member, in_opp);
                for (q, &thr) in on.iter().zip(&through) {
                    assert_eq!(in_demazure(q, x).member, in_dem);
                    if thr {
                        assert_eq!(in_opposite_demazure_on(q, x, q.word()).unwrap(), in_opp);
                    }
                }
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

fn criterion_6() {
    for (d, l) in sweep_configs() {
        let words = reduced_words_of_w0(&d).unwrap();
        if d.name() == "A3" {
            assert_eq!(words.len(), 16);
        }
        for x in d.weyl_group().unwrap().elements() {
            let ext = extremal(&d, x, &l).unwrap();
            assert_eq!(ext.weight(), d.act_coweight(x, &l));
            let got: BTreeSet<Vec<i64>> = extremal_vertices(&d, x, &l).unwrap().vertex_set().into_iter().map(|c| c.0).collect();
            let want: BTreeSet<Vec<i64>> = elements_leq(&d, x).iter().map(|z| d.act_coweight(z, &l).0).collect();
            assert_eq!(got, want);
            assert_eq!(ext.vertices().unwrap().vertex_set().into_iter().map(|c| c.0).collect::<BTreeSet<_>>(), want);
            for w in words.iter() {
                let on = extremal_on(&d, x, &l, w).unwrap();
                assert_eq!(on.canonical_n(), ext.canonical_n());
            }
        }
    }
}

fn criterion_7() {
    for (d, l) in sweep_configs() {
        let g = generate_crystal(&d, &l).unwrap();
        let oracle = StrataOracle::new(&d, &l).unwrap();
        let j = d.stabilizer_indices(&l);
        let mut iotas = Vec::new();
        let mut kappas = Vec::new();
        for p in g.elements() {
            let i = iota(p).unwrap();
            assert_eq!(iota_shortcut(p), i);
            assert_eq!(oracle.oracle_iota(p).unwrap(), i);
            let k = kappa(p).unwrap();
            assert_eq!(kappa_by_predicate(p).unwrap(), k);
            assert_eq!(oracle.oracle_kappa(p).unwrap(), k);
            iotas.push(i);
            kappas.push(k);
        }
        for (x, set) in oracle.demazure_sets() {
            for (p, i) in g.elements().zip(&iotas) {
                assert_eq!(set.contains(p), d.bruhat_le(i, x));
            }
        }
        for (x, set) in oracle.opposite_sets() {
            for (p, k) in g.elements().zip(&kappas) {
                assert_eq!(set.contains(p), d.bruhat_le(x, k));
            }
        }
        for x in d.weyl_group().unwrap().elements() {
            let ext = extremal(&d, x, &l).unwrap();
            assert_eq!(iota(&ext).unwrap(), d.coset_min(x, &j));
            assert_eq!(kappa(&ext).unwrap(), d.coset_max(x, &j));
        }
    }
}

fn random_binf(rng: &mut ChaCha8Rng, pool: &[LusztigDatum]) -> LusztigDatum {
    pool[rng.random_range(0..pool.len())].clone()
}

fn criterion_8() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ea7);
    let pools: Vec<Vec<LusztigDatum>> = ["A2", "A3"]
        .iter()
        .map(|n| generate_binf_truncated(&RootDatum::parse(n).unwrap(), 6).unwrap())
        .collect();
    for k in 0..10_000 {
        let p = random_binf(&mut rng, &pools[k % 2]);
        let s = p.star().unwrap();
        assert_eq!(s.star().unwrap().canonical_n(), p.canonical_n());
        assert_eq!(s.weight(), p.weight());
        assert!(check_iota_star(&p).unwrap(), "{p:?}");
    }
}

fn criterion_9() {
    let d = a2();
    let i = ReducedWord::parse(&d, "1,2,1").unwrap();
    let j = ReducedWord::parse(&d, "2,1,2").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x3b0);
    for _ in 0..100_000 {
        let (a, b, c) = (rng.random_range(0..60), rng.random_range(0..60), rng.random_range(0..60));
        let t = tropical_three(a, b, c);
        assert!(t.0 >= 0 && t.1 >= 0 && t.2 >= 0);
        assert_eq!(tropical_three(t.0, t.1, t.2), (a, b, c));
        let p = LusztigDatum::new(&d, i.clone(), vec![a, b, c], Base::Infinity).unwrap();
        let q = p.change_word(&j).unwrap();
        assert_eq!(q.n(), &[t.0, t.1, t.2]);
        assert_eq!(q.path_vertices()[0], p.path_vertices()[0]);
    }

    let mut pool: Vec<LusztigDatum> = Vec::new();
    for (d, l) in sweep_configs() {
        pool.extend(generate_crystal(&d, &l).unwrap().elements().cloned());
    }
    for name in ["A2", "A3"] {
        pool.extend(generate_binf_truncated(&RootDatum::parse(name).unwrap(), 5).unwrap());
    }
    for _ in 0..10_000 {
        let p = pool[rng.random_range(0..pool.len())].clone();
        let d = p.datum().clone();
        let jj = rng.random_range(0..d.rank());
        let h = d.simple_coroot(jj);
        let eps = p.epsilon(jj).unwrap();
        if p.lambda().is_some() {
            assert_eq!(p.phi(jj).unwrap() - eps, d.alpha_pair(jj, &p.weight()));
        }
        if let Some(fp) = p.f(jj) {
            assert_eq!(fp.e(jj).unwrap().canonical_n(), p.canonical_n());
            assert_eq!(fp.epsilon(jj).unwrap(), eps + 1);
            assert_eq!(fp.weight(), &p.weight() - &h);
        } else {
            assert!(p.lambda().is_some() && p.phi(jj).unwrap() == 0);
        }
        match p.e(jj) {
            Some(ep) => {
                assert_eq!(ep.f(jj).unwrap().canonical_n(), p.canonical_n());
                assert_eq!(ep.weight(), &p.weight() + &h);
            }
            None => assert_eq!(eps, 0),
        }
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn()); 9] = [
        ("A2 adjoint crystal graph", criterion_1),
        ("Lusztig data and vertices of the A2 fixtures", criterion_2),
        ("Demazure fixtures and extremal containment", criterion_3),
        ("opposite Demazure fixture by three methods", criterion_4),
        ("membership deciders against oracles on A2 and A3", criterion_5),
        ("extremal polytopes: weight, vertices, word independence", criterion_6),
        ("iota and kappa against oracles; strata partition", criterion_7),
        ("star involution on truncated B(inf)", criterion_8),
        ("move transform and crystal axioms", criterion_9),
    ];
    let mut failed = 0;
    let seen: HashSet<&str> = criteria.iter().map(|c| c.0).collect();
    assert_eq!(seen.len(), criteria.len());
    for (k, (name, f)) in criteria.iter().enumerate() {
        let ok = panic::catch_unwind(AssertUnwindSafe(f)).is_ok();
        println!("criterion {} ({name}): {}", k + 1, if ok { "PASS" } else { "FAIL" });
        if !ok {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
