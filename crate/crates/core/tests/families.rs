use defset_core::designs::{hkm_function, hkm_set, is_skew_set, paley_set};
use defset_core::verify::{case_ids, run_cases, Verdict};
use defset_core::Field;

fn odd_prime_powers(limit: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for p in (3..=limit).step_by(2) {
        if (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            continue;
        }
        let mut q = p;
        let mut m = 1;
        while q <= limit {
            out.push((p, m));
            q *= p;
            m += 1;
        }
    }
    out
}

#[test]
fn paley_skew_iff_three_mod_four() {
    for (p, m) in odd_prime_powers(343) {
        let field = Field::new(p, m).unwrap();
        let q = field.q();
        let d = paley_set(&field).unwrap();
        assert_eq!(d.len() as u32, (q - 1) / 2, "q = {q}");
        let skew = is_skew_set(&field, d.elems());
        assert_eq!(skew, q % 4 == 3, "q = {q}");
        if skew {
            for t in [1i64, 2, 7, (q as i64) - 2] {
                let x = field.exp(t);
                assert!(is_skew_set(&field, d.scaled(x).elems()), "q = {q}, x = a^{t}");
            }
        }
    }
}

#[test]
fn hkm_partition_of_trace_zeros() {
    for h in [1u32, 3] {
        let field = Field::new(3, 3 * h).unwrap();
        let g = hkm_function(h);
        let d = hkm_set(h).unwrap();
        let neg = d.negated();
        for x in field.elements() {
            let in_d = d.elems().binary_search(&x).is_ok();
            let in_neg = neg.elems().binary_search(&x).is_ok();
            let zero = g.eval_trace(&field, x) == 0;
            let parts = in_d as u32 + in_neg as u32 + (x.0 == 0) as u32;
            assert_eq!(parts, zero as u32, "h = {h}, x = {}", x.0);
        }
        assert_eq!(d.len() as u64, (3u64.pow(3 * h - 1) - 1) / 2);
    }
}

#[test]
fn every_reproduction_case_passes() {
    let reports = run_cases(None).unwrap();
    assert_eq!(reports.len(), case_ids().len());
    for r in &reports {
        assert_eq!(r.verdict, Verdict::Pass, "{}: expected {} got {}", r.case_id, r.expected, r.actual);
    }
}
