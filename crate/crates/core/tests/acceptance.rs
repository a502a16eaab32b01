mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::vf_table::vf_alg_lines;
use common::{bracket_verdict, connections, dual_corpus, equation_verdict, lie_fixtures, non_lie_fixtures, rng};
use ha2kit::fixtures::*;
use ha2kit::ha2::{
    al_consequences, check_al2, check_lie2, check_lie2_brackets, check_r2_morphism, lie_consequences, tensor_law_suite,
    to_adapted, Lifter,
};
use ha2kit::point_ha::{check_point_lie, point_equivalence_test};
use ha2kit::prolong::prolong2;
use ha2kit::random::random_point_ha;
use ha2kit::ruth2::{
    adjoint_rep, check_morphism, check_ruth, connection_change, ha_to_ruth, ruth_to_ha, Connection, RuthMorphism,
};
use ha2kit::symbolic::Poly;
use ha2kit::{HA2Data, Section};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Outcome {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn full_suite(name: &str, h: &HA2Data) -> Outcome {
    for (what, rep) in [
        ("al2", check_al2(h)),
        ("lie2", check_lie2(h)),
        ("brackets", check_lie2_brackets(h)),
        ("r2 morphism", check_r2_morphism(h)),
    ] {
        ensure(rep.passed(), || format!("{name}: {what} fails {:?}", rep.failed_families()))?;
    }
    Ok(())
}

fn t2m_fixture() -> Outcome {
    let t = Instant::now();
    for n in 1..=3 {
        full_suite(&format!("T2M({n})"), &t2m(n))?;
    }
    within(t.elapsed(), Duration::from_secs(1))
}

fn prolongation() -> Outcome {
    let t = Instant::now();
    full_suite("prolong(so3 action)", &prolong2(&so3_action()))?;
    within(t.elapsed(), Duration::from_secs(10))
}

fn dual_oracle() -> Outcome {
    let corpus = dual_corpus();
    ensure(corpus.len() >= 50, || format!("corpus has {} inputs", corpus.len()))?;
    for (name, h) in &corpus {
        let (b, e) = (bracket_verdict(h), equation_verdict(h));
        ensure(b == e, || format!("{name}: bracket verdict {b}, equation verdict {e}"))?;
    }
    Ok(())
}

fn tensor_laws() -> Outcome {
    for (k, (name, h)) in lie_fixtures().into_iter().chain(non_lie_fixtures()).enumerate() {
        let rep = tensor_law_suite(&h, 20, 1000 + k as u64);
        ensure(rep.passed(), || format!("{name}: {:?}", rep.failed_families()))?;
    }
    Ok(())
}

fn consequences() -> Outcome {
    let mut al = 0;
    let mut lie = 0;
    for (name, h) in dual_corpus() {
        if check_al2(&h).passed() {
            al += 1;
            let rep = al_consequences(&h);
            ensure(rep.passed(), || format!("{name}: {:?}", rep.failed_families()))?;
            if equation_verdict(&h) {
                lie += 1;
                let rep = lie_consequences(&h);
                ensure(rep.passed(), || format!("{name}: {:?}", rep.failed_families()))?;
            }
        }
    }
    ensure(al > lie && lie > 0, || format!("{al} almost Lie inputs, {lie} Lie inputs"))
}

fn ruth_correspondence() -> Outcome {
    for (name, h) in lie_fixtures() {
        let nablas = connections(h.n, h.r);
        let adapted = to_adapted(&h);
        let mut outputs = Vec::new();
        let mut reps = Vec::new();
        for nabla in &nablas {
            let (rep, phi) = ha_to_ruth(&h, nabla).map_err(|e| format!("{name}: {e}"))?;
            let ruth = check_ruth(&rep);
            ensure(ruth.passed(), || format!("{name}: {:?}", ruth.failed_families()))?;
            let adj = adjoint_rep(&h.algebroid, nabla).map_err(|e| e.to_string())?;
            let mor = check_morphism(&phi, &rep, &adj).map_err(|e| e.to_string())?;
            ensure(mor.passed(), || format!("{name}: anchor morphism {:?}", mor.failed_families()))?;
            let g = ruth_to_ha(&rep, &phi, nabla).map_err(|e| format!("{name}: {e}"))?;
            ensure(g == adapted, || format!("{name}: round trip differs from adapted form"))?;
            outputs.push(g);
            reps.push(rep);
        }
        ensure(outputs.windows(2).all(|w| w[0] == w[1]), || format!("{name}: connection dependent"))?;
        if nablas.len() == 2 {
            let change = connection_change(&h, &nablas[1], &nablas[0]).map_err(|e| e.to_string())?;
            let mor = check_morphism(&change, &reps[0], &reps[1]).map_err(|e| e.to_string())?;
            ensure(mor.passed(), || format!("{name}: connection change {:?}", mor.failed_families()))?;
        }
    }
    Ok(())
}

fn point_classification() -> Outcome {
    let t = Instant::now();
    let mut g = rng(20240601);
    for k in 0..1000 {
        let p = random_point_ha(&mut g, 2);
        ensure(p.r <= 3 && p.m <= 3, || format!("instance {k} too large"))?;
        ensure(point_equivalence_test(&p), || format!("instance {k}: {p:?}"))?;
    }
    let adj = so3_adjoint_point();
    ensure(check_point_lie(&adj).passed() && point_equivalence_test(&adj), || "so3 adjoint".into())?;
    for (p, fam) in [
        (non_jacobi_point(), "point:jacobi"),
        (abelian_non_module_point(), "point:module"),
        (so3_trivial_module_point(), "point:equivariant"),
        (so3_omega_bar_point(), "point:omega_bar"),
        (so3_beta_zero_point(), "point:beta"),
    ] {
        let failed: Vec<String> = check_point_lie(&p).failed_families().into_iter().collect();
        ensure(failed == [fam], || format!("expected only {fam}, got {failed:?}"))?;
    }
    within(t.elapsed(), Duration::from_secs(30))
}

fn reconstruction() -> Outcome {
    let alg = so3_action();
    let nabla = Connection::trivial(3, 3);
    let rep = adjoint_rep(&alg, &nabla).map_err(|e| e.to_string())?;
    let h = ruth_to_ha(&rep, &RuthMorphism::identity(&rep), &nabla).map_err(|e| e.to_string())?;
    ensure(h.q_mu_i == alg.anchor, || "core anchor differs from the anchor matrix".into())?;
    let unit: Vec<Vec<Poly>> = (0..3).map(|a| (0..3).map(|mu| Poly::int((a == mu) as i64)).collect()).collect();
    ensure(h.q_a_mu == unit, || "core anchor to TM is not the identity".into())?;
    let lf = Lifter::new(&h);
    for i in 0..3 {
        for nu in 0..3 {
            let expected = Section((0..3).map(|a| -alg.anchor[a][i].diff(nu)).collect());
            let got = lf.box_(&Section::frame(i, 3), &Section::frame(nu, 3)).map_err(|e| e.to_string())?;
            ensure(got == expected, || format!("box(e{}, c{}) differs", i + 1, nu + 1))?;
        }
    }
    full_suite("reconstruction", &h)
}

fn bracket_table() -> Outcome {
    let failed: Vec<&str> = vf_alg_lines(2, 2).into_iter().filter(|(_, ok)| !ok).map(|(l, _)| l).collect();
    ensure(failed.is_empty(), || format!("lines {failed:?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("T2M fixture passes every order-two check for n = 1, 2, 3", t2m_fixture),
        ("prolongation of the so(3) action algebroid is Lie of order two", prolongation),
        ("bracket and equation verdicts agree on the corpus", dual_oracle),
        ("tensor laws of the structure maps on every fixture", tensor_laws),
        ("almost Lie and Lie consequences of the structure maps", consequences),
        ("correspondence with two-term representations up to homotopy", ruth_correspondence),
        ("classification of order-two Lie algebroids over a point", point_classification),
        ("reconstruction from the adjoint representation of so(3)", reconstruction),
        ("bracket table of nonpositive weight vector fields over a point", bracket_table),
    ];
    let mut all = true;
    for (k, (desc, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("criterion {}: pass: {desc} ({ms} ms)", k + 1),
            Err(why) => {
                all = false;
                println!("criterion {}: FAIL: {desc} ({ms} ms): {why}", k + 1);
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
