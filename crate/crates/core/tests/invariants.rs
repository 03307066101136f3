use stabgeom::{
    classical_min_distance, css_from_classical, distance, quadratic_residue_code, weight_t_error_set, BitMatrix,
    Builtin, DistanceOptions, StabilizerCode,
};

fn codes() -> Vec<StabilizerCode> {
    let mut out: Vec<StabilizerCode> = Builtin::ALL.iter().map(|b| b.code()).collect();
    out.push(quadratic_residue_code(5).unwrap());
    out.push(quadratic_residue_code(13).unwrap());
    out
}

#[test]
fn correctable_iff_within_half_distance() {
    for code in codes() {
        let report = distance(&code, &DistanceOptions::default()).unwrap();
        let t_max = report.correctable_weight().unwrap();
        for t in 0..=t_max + 1 {
            let errors = weight_t_error_set(code.n(), t).unwrap();
            assert_eq!(
                code.correctable(&errors).unwrap().correctable,
                t <= t_max,
                "n={} t={t}",
                code.n()
            );
        }
    }
}

#[test]
fn css_distance_at_least_classical_distance() {
    let classical = [
        vec!["1000110", "0100101", "0010011", "0001111"],
        vec!["1000", "0100", "0010", "0001"],
        vec!["11000", "00110", "10101", "01111"],
    ];
    for rows in classical {
        let g = BitMatrix::from_strs(&rows).unwrap();
        let Ok(code) = css_from_classical(&g, g.col_count()) else {
            continue;
        };
        let d_classical = classical_min_distance(&g).unwrap().unwrap();
        let report = distance(&code, &DistanceOptions::default()).unwrap();
        if let Some(d) = report.min_weight_dual_minus_s {
            assert!(d >= d_classical, "{rows:?}: quantum {d} < classical {d_classical}");
        }
    }
}

#[test]
fn quadratic_residue_codes_are_shift_invariant() {
    for p in [5, 13, 29] {
        let code = quadratic_residue_code(p).unwrap();
        assert_eq!(code.dim_s(), p as usize - 1);
        assert_eq!(code.encoded_qubits(), 1);
        for g in code.generators() {
            assert!(code.in_stabilizer(&g.rotate_right(1)).unwrap());
        }
    }
}
