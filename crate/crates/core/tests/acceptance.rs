//! Acceptance run: one PASS/FAIL line per criterion, with the time limits
//! pinned below. Exits nonzero when a criterion outside `UNATTAINABLE` fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rephom_core::rep::{generic_group_matrices, surface_word};
use rephom_core::{
    braid_word_action, fitting_ideal, fitting_ideals, hilbert_function, homology_all,
    ideal_contains, ideal_equals, is_zero_module, is_zero_module_with, koszul_complex,
    link_rep_homology_with, make_link, prune, surface_rep_homology_alg, surface_rep_homology_group,
    surface_rep_homology_group_with, AlgType, Budget, Field, GroupType, HomologyOptions, Link,
    LinkModel, MatrixTag, ModulePresentation, PolyMatrix, Polynomial, RelationReducer, RepOptions,
    RingSpec, Strand,
};

/// Criteria that cannot all hold with one link model; see the README.
const UNATTAINABLE: &[u32] = &[7];

const LIMIT_1: Duration = Duration::from_secs(1);
const LIMIT_2: Duration = Duration::from_secs(1);
const LIMIT_3: Duration = Duration::from_secs(5);
const LIMIT_4: Duration = Duration::from_secs(120);
const BUDGET_4_N5: Duration = Duration::from_secs(30 * 60);
const LIMIT_5: Duration = Duration::from_secs(10);
const LIMIT_6: Duration = Duration::from_secs(1);
const LIMIT_7: Duration = Duration::from_secs(120);
const HILBERT_5: u32 = 8;

type Check = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(format!("{t:.2?} < {limit:?}"))
}

fn err(e: rephom_core::Error) -> String {
    e.to_string()
}

/// The printed entries use `x_{i,j}` for the entries of the first matrix.
fn printed(ring: &RingSpec, text: &str) -> Polynomial {
    let mut s = String::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        if (c == 'x' || c == 'y') && chars.peek() == Some(&'{') {
            chars.next();
            let inner: String = chars.by_ref().take_while(|&d| d != '}').collect();
            s.push_str(&format!("{c}_(1,{inner})"));
        } else {
            s.push(c);
        }
    }
    ring.parse(&s).expect("printed entry parses")
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let (ring, packs) = generic_group_matrices(
        GroupType::Unipotent,
        4,
        &MatrixTag::surface_tags(1),
        Field::Rational,
    )
    .map_err(err)?;
    let w = surface_word(&packs[..1], &packs[1..], &ring).map_err(err)?;
    let expected = [
        ((0, 2), "x{1,2}*y{2,3}-x{2,3}*y{1,2}"),
        (
            (0, 3),
            "y{1,2}*x{2,3}*x{3,4}-x{1,2}*y{2,3}*x{3,4}+y{1,2}*x{2,3}*y{3,4}-x{1,2}*y{2,3}*y{3,4}\
             +x{1,2}*y{2,4}-y{1,2}*x{2,4}+x{1,3}*y{3,4}-y{1,3}*x{3,4}",
        ),
        ((1, 3), "x{2,3}*y{3,4}-x{3,4}*y{2,3}"),
    ];
    let mut nonzero = 0;
    for i in 0..4 {
        for j in 0..4 {
            let want = expected
                .iter()
                .find(|(pos, _)| *pos == (i, j))
                .map_or_else(|| ring.zero(), |(_, t)| printed(&ring, t));
            ensure(
                *w.get(i, j) == want,
                format!("entry ({},{}) = {}", i + 1, j + 1, ring.render(w.get(i, j))),
            )?;
            nonzero += usize::from(!want.is_zero());
        }
    }
    let t = within(start, LIMIT_1)?;
    Ok(format!("{nonzero} nonzero entries equal, 13 zero; {t}"))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let hs = surface_rep_homology_group(2, 1, GroupType::Unipotent).map_err(err)?;
    let ring = hs[0].ring();
    ensure(ring.nvars() == 2, "ring is not in two variables")?;
    for h in &hs[..2] {
        ensure(
            h.is_free() && h.generator_rank() == 1,
            format!("H_{} is not free of rank 1", h.homological_degree()),
        )?;
    }
    for h in &hs[2..] {
        ensure(is_zero_module(h).map_err(err)?, "higher homology nonzero")?;
    }
    let t = within(start, LIMIT_2)?;
    Ok(format!(
        "H_0, H_1 free of rank 1 over QQ[x, y], {} higher; {t}",
        hs.len() - 2
    ))
}

fn criterion_3() -> Check {
    let start = Instant::now();
    let hs = surface_rep_homology_group(3, 1, GroupType::Unipotent).map_err(err)?;
    let r = hs[0].ring().clone();
    let g = r
        .parse("x_(1,2,3)*y_(1,1,2)-x_(1,1,2)*y_(1,2,3)")
        .map_err(err)?;
    let same = |p: &ModulePresentation, i: usize, want: &[Polynomial]| -> Result<(), String> {
        let f = fitting_ideal(p, i).map_err(err)?;
        ensure(
            ideal_equals(&f, want, &r).map_err(err)?,
            format!("Fitt_{i}(H_{}) differs", p.homological_degree()),
        )
    };
    same(&hs[0], 0, std::slice::from_ref(&g))?;
    same(&hs[2], 0, std::slice::from_ref(&g))?;
    same(&hs[1], 0, &[g.pow(2)])?;
    same(&hs[1], 1, std::slice::from_ref(&g))?;
    ensure(is_zero_module(&hs[3]).map_err(err)?, "H_3 nonzero")?;
    let t = within(start, LIMIT_3)?;
    Ok(format!(
        "Fitting ideals (g), (g^2), (g), (g) and H_3 = 0; {t}"
    ))
}

fn criterion_4() -> Check {
    let mut parts = Vec::new();
    for n in 2..=4 {
        let start = Instant::now();
        let hs = surface_rep_homology_group(n, 1, GroupType::Unipotent).map_err(err)?;
        for h in &hs[n..] {
            ensure(
                is_zero_module(h).map_err(err)?,
                format!("n={n}: H_{} nonzero", h.homological_degree()),
            )?;
        }
        let t = within(start, LIMIT_4)?;
        let range = if hs.len() > n {
            format!("H_{n}..H_{} zero", hs.len() - 1)
        } else {
            format!("no H_i with i >= {n}")
        };
        parts.push(format!("n={n}: {range} ({t})"));
    }
    Ok(parts.join("; "))
}

/// Not required: reported only.
fn report_4_n5() -> String {
    let start = Instant::now();
    let budget = Budget::with_timeout(BUDGET_4_N5);
    let options = RepOptions {
        budget,
        ..RepOptions::default()
    };
    let res = match surface_rep_homology_group_with(5, 1, GroupType::Unipotent, &options) {
        Ok(r) => r,
        Err(e) => return format!("n=5: {e} after {:.1?}", start.elapsed()),
    };
    let mut flags = Vec::new();
    for h in &res.homology {
        match is_zero_module_with(h, &budget) {
            Ok(z) => flags.push(if z { '0' } else { '*' }),
            Err(e) => return format!("n=5: {e} after {:.1?}", start.elapsed()),
        }
    }
    let upper_zero = flags.iter().skip(5).all(|&c| c == '0');
    format!(
        "n=5: zero flags H_0..H_{} = {} ({}), truncated {}, {:.1?} under a {:?} budget",
        flags.len().saturating_sub(1),
        flags.iter().collect::<String>(),
        if upper_zero {
            "H_i = 0 for i >= 5"
        } else {
            "some H_i != 0 for i >= 5"
        },
        res.truncated,
        start.elapsed(),
        BUDGET_4_N5
    )
}

fn criterion_5() -> Check {
    let start = Instant::now();
    let group = surface_rep_homology_group(3, 1, GroupType::Unipotent).map_err(err)?;
    let alg = surface_rep_homology_alg(3, 1, AlgType::Nilpotent).map_err(err)?;
    ensure(group.len() == alg.len(), "different homological lengths")?;
    let r = group[0].ring().clone();
    ensure(*alg[0].ring() == r, "different rings")?;
    for (a, b) in group.iter().zip(&alg) {
        let p = a.homological_degree();
        let (fa, fb) = (
            fitting_ideals(a).map_err(err)?,
            fitting_ideals(b).map_err(err)?,
        );
        for i in 0..fa.len().max(fb.len()) {
            let one = vec![r.one()];
            let x = fa.get(i).unwrap_or(&one);
            let y = fb.get(i).unwrap_or(&one);
            ensure(
                ideal_equals(x, y, &r).map_err(err)?,
                format!("Fitt_{i}(H_{p}) differs"),
            )?;
        }
        let ha = hilbert_function(a, HILBERT_5).map_err(err)?;
        let hb = hilbert_function(b, HILBERT_5).map_err(err)?;
        ensure(
            ha.values == hb.values,
            format!("Hilbert vectors of H_{p} differ"),
        )?;
    }
    let t = within(start, LIMIT_5)?;
    Ok(format!(
        "{} degrees agree on Fitting ideals and h(0..={HILBERT_5}); {t}",
        group.len()
    ))
}

fn criterion_6() -> Check {
    let start = Instant::now();
    let res = link_rep_homology_with(
        &Link::trefoil(),
        2,
        GroupType::Unipotent,
        LinkModel::TwoTuple,
        &RepOptions::default(),
    )
    .map_err(err)?;
    let r = &res.ring;
    let h0 = &res.homology[0];
    ensure(
        h0.generator_rank() == 1,
        "H_0 needs more than one generator",
    )?;
    let want = [
        r.parse("y_(1,1,2)-x_(2,1,2)").map_err(err)?,
        r.parse("y_(2,1,2)-x_(1,1,2)").map_err(err)?,
    ];
    ensure(
        ideal_equals(h0.relations().row(0), &want, r).map_err(err)?,
        "H_0 is not the ring modulo (y_1 - x_2, y_2 - x_1)",
    )?;
    // a polynomial ring in two variables: h(d) = d + 1
    let h = hilbert_function(h0, 6).map_err(err)?;
    ensure(
        h.values == (1..=7).collect::<Vec<u64>>(),
        format!("Hilbert vector {:?}", h.values),
    )?;
    for m in &res.homology[1..] {
        ensure(
            is_zero_module(m).map_err(err)?,
            format!("H_{} nonzero", m.homological_degree()),
        )?;
    }
    let t = within(start, LIMIT_6)?;
    Ok(format!(
        "H_0 = QQ[4 vars]/(y_1 - x_2, y_2 - x_1), h = 1,2,..,7; H_1..H_{} zero; {t}",
        res.homology.len() - 1
    ))
}

fn criterion_7_with(model: LinkModel) -> Check {
    let start = Instant::now();
    let res = link_rep_homology_with(
        &Link::trefoil(),
        3,
        GroupType::Unipotent,
        model,
        &RepOptions::default(),
    )
    .map_err(err)?;
    let r = &res.ring;
    let h0 = res.homology[0].relations().row(0).to_vec();
    ensure(
        ideal_equals(&h0, &res.elements, r).map_err(err)?,
        "H_0 differs from the quotient by the entries",
    )?;
    let mut problems = Vec::new();
    for name in ["y_(1,2,3)-y_(2,2,3)", "y_(1,1,3)-y_(2,1,3)"] {
        let f = r.parse(name).map_err(err)?;
        if !ideal_contains(&h0, &f, r).map_err(err)? {
            problems.push(format!("{name} not in the H_0 ideal"));
        }
    }
    let mut flags = String::new();
    for h in &res.homology {
        flags.push(if is_zero_module(h).map_err(err)? {
            '0'
        } else {
            '*'
        });
    }
    if flags.len() < 4 || flags[..4].contains('0') {
        problems.push(format!(
            "zero flags H_0.. = {flags}, expected H_0..H_3 nonzero"
        ));
    }
    let t = start.elapsed();
    if t >= LIMIT_7 {
        problems.push(format!("took {t:.2?}"));
    }
    if problems.is_empty() {
        Ok(format!(
            "{model}: H_0 matches, both differences in the ideal, flags {flags}; {t:.2?}"
        ))
    } else {
        Err(format!("{model}: {}", problems.join("; ")))
    }
}

fn criterion_7() -> Check {
    criterion_7_with(LinkModel::TwoTuple)
}

fn strands(ty: GroupType, n: usize, m: usize) -> Result<(RingSpec, Vec<Strand>), String> {
    let tags: Vec<MatrixTag> = (1..=m).map(MatrixTag::X).collect();
    let (ring, packs) = generic_group_matrices(ty, n, &tags, Field::Rational).map_err(err)?;
    let s = packs
        .into_iter()
        .map(|p| Strand {
            matrix: p.matrix,
            inverse: p.inverse.expect("groups have inverses"),
        })
        .collect();
    Ok((ring, s))
}

fn criterion_8() -> Check {
    let mut done = Vec::new();

    // d∘d = 0 on every complex built here
    let mut complexes = 0;
    for (ty, n) in [
        (GroupType::Unipotent, 2),
        (GroupType::Unipotent, 3),
        (GroupType::Borel, 2),
        (GroupType::SL, 2),
    ] {
        let res = surface_rep_homology_group_with(n, 1, ty, &RepOptions::default()).map_err(err)?;
        ensure(
            res.complex.is_complex().map_err(err)?,
            format!("{ty}{n}: d∘d != 0"),
        )?;
        complexes += 1;
    }
    for link in [Link::trefoil(), Link::figure_eight()] {
        let res = link_rep_homology_with(
            &link,
            2,
            GroupType::Unipotent,
            LinkModel::TwoTuple,
            &RepOptions::default(),
        )
        .map_err(err)?;
        ensure(
            res.complex.is_complex().map_err(err)?,
            format!("{link}: d∘d != 0"),
        )?;
        complexes += 1;
    }
    done.push(format!("d∘d = 0 on {complexes} complexes"));

    // regular variable sequences, r <= 4
    let r = RingSpec::polynomial_ring(Field::Rational, &["a", "b", "c", "d"]).map_err(err)?;
    for len in 1..=4 {
        let seq: Vec<Polynomial> = (0..len).map(|i| r.var(i)).collect();
        let c = koszul_complex(&seq, &r).map_err(err)?;
        let rep = homology_all(&c, &HomologyOptions::default()).map_err(err)?;
        for h in &rep.modules[1..] {
            ensure(
                is_zero_module(h).map_err(err)?,
                format!("r={len}: positive homology"),
            )?;
        }
    }
    done.push("regular sequences acyclic for r <= 4".into());

    // braid relations, braid index <= 3, size <= 3
    let mut braid_cases = 0;
    for ty in GroupType::ALL {
        for n in 2..=3 {
            if ty == GroupType::GL && n == 3 {
                continue;
            }
            let (ring, xs) = strands(ty, n, 3)?;
            let act = |w: &[i32]| {
                braid_word_action(&make_link(3, w.to_vec()).unwrap(), &xs, &ring).map_err(err)
            };
            ensure(
                act(&[1, 2, 1])? == act(&[2, 1, 2])?,
                format!("{ty}{n}: braid relation"),
            )?;
            ensure(act(&[1, -1])? == xs, format!("{ty}{n}: s1 s1^-1"))?;
            braid_cases += 1;
        }
        let (ring, xs) = strands(ty, 2, 4)?;
        let act = |w: &[i32]| {
            braid_word_action(&make_link(4, w.to_vec()).unwrap(), &xs, &ring).map_err(err)
        };
        ensure(
            act(&[1, 3])? == act(&[3, 1])?,
            format!("{ty}2: distant commutation"),
        )?;
    }
    done.push(format!(
        "braid relations on {braid_cases} group/size pairs, distant commutation"
    ));

    // X * X^-1 = I modulo relations
    for ty in GroupType::ALL {
        for n in 2..=4 {
            let (ring, packs) =
                generic_group_matrices(ty, n, &[MatrixTag::X(1)], Field::Rational).map_err(err)?;
            let red = RelationReducer::new(&ring).map_err(err)?;
            let p = &packs[0];
            let prod = red.reduce_matrix(&p.matrix.mul(p.inverse.as_ref().unwrap()).map_err(err)?);
            ensure(
                prod == PolyMatrix::identity(n, ring.nvars(), ring.field()),
                format!("{ty}{n}: X X^-1 != I"),
            )?;
        }
    }
    done.push("inverses for all four groups, n <= 4".into());

    // prune keeps Fitting ideals and Hilbert vectors
    let hs = {
        let c = koszul_complex(
            &[r.var(0).pow(2), &r.var(0) * &r.var(1), r.var(1).pow(2)],
            &r,
        )
        .map_err(err)?;
        homology_all(
            &c,
            &HomologyOptions {
                prune: false,
                ..HomologyOptions::default()
            },
        )
        .map_err(err)?
        .modules
    };
    for h in &hs {
        let q = prune(h);
        for i in 0..=h.generator_rank() {
            ensure(
                ideal_equals(
                    &fitting_ideal(h, i).map_err(err)?,
                    &fitting_ideal(&q, i).map_err(err)?,
                    &r,
                )
                .map_err(err)?,
                "prune changed a Fitting ideal",
            )?;
        }
        ensure(
            hilbert_function(h, 6).map_err(err)?.values
                == hilbert_function(&q, 6).map_err(err)?.values,
            "prune changed a Hilbert vector",
        )?;
    }
    done.push("prune invariants".into());

    // membership against a degree-bounded span in two variables
    let r2 = RingSpec::polynomial_ring(Field::Rational, &["x", "y"]).map_err(err)?;
    let gens = [r2.parse("x^2-y^2").unwrap(), r2.parse("x*y").unwrap()];
    let mut checked = 0;
    for d in 0..=6u32 {
        for a in 0..=d {
            let mono = &r2.var(0).pow(a) * &r2.var(1).pow(d - a);
            // (x^2 - y^2, xy) contains every monomial of degree >= 3;
            // in degree 2 its span holds xy but neither x^2 nor y^2
            let expected = d >= 3 || (d == 2 && a == 1);
            ensure(
                ideal_contains(&gens, &mono, &r2).map_err(err)? == expected,
                format!("membership of x^{a} y^{}", d - a),
            )?;
            checked += 1;
        }
    }
    done.push(format!("{checked} membership checks"));

    Ok(done.join("; "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (1, "U4 commutator word", criterion_1),
        (2, "U2 torus", criterion_2),
        (3, "U3 torus Fitting ideals", criterion_3),
        (4, "vanishing range n = 2..4", criterion_4),
        (5, "U3 group vs N3 algebra", criterion_5),
        (6, "trefoil at U2", criterion_6),
        (7, "trefoil at U3", criterion_7),
        (8, "property suite", criterion_8),
    ];
    let mut unexpected = Vec::new();
    for (id, name, f) in criteria {
        match f() {
            Ok(detail) => println!("PASS {id} {name}: {detail}"),
            Err(detail) => {
                let known = UNATTAINABLE.contains(&id);
                println!(
                    "FAIL {id} {name}: {detail}{}",
                    if known { " [known]" } else { "" }
                );
                if !known {
                    unexpected.push(id);
                }
            }
        }
    }
    match criterion_7_with(LinkModel::FixedPoint) {
        Ok(d) | Err(d) => println!("INFO 7 trefoil at U3, fixed-point model: {d}"),
    }
    println!("INFO 4 {}", report_4_n5());
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures: {unexpected:?}");
        ExitCode::FAILURE
    }
}
