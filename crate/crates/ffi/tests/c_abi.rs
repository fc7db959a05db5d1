//! Exercises the C ABI: first through direct Rust calls, then by compiling
//! and running a small C program against the generated header and staticlib.

use std::path::PathBuf;
use std::process::Command;

use pepcd_ffi::{
    pepcd_csr_test, pepcd_pcd_build, pepcd_pcd_density, pepcd_pcd_domination, pepcd_pcd_excluded,
    pepcd_pcd_free, pepcd_pcd_sample_size, PepcdCsrResult, PepcdStatus,
};

fn te_anchors() -> Vec<f64> {
    vec![0.0, 0.0, 1.0, 0.0, 0.5, 0.866_025_403_784_438_6]
}

#[test]
fn handle_lifecycle_and_densities() {
    let xs: Vec<f64> = vec![0.2, 0.1, 0.5, 0.3, 0.7, 0.1, 0.45, 0.6, 5.0, 5.0];
    let ys = te_anchors();
    let mut handle = std::ptr::null_mut();
    // strict build fails on the outside point
    let status = unsafe {
        pepcd_pcd_build(xs.as_ptr(), 5, ys.as_ptr(), 3, 2.0, false, &mut handle)
    };
    assert_eq!(status, PepcdStatus::OutsideDomain);
    // dropping it succeeds
    let status =
        unsafe { pepcd_pcd_build(xs.as_ptr(), 5, ys.as_ptr(), 3, 2.0, true, &mut handle) };
    assert_eq!(status, PepcdStatus::Ok);
    assert_eq!(unsafe { pepcd_pcd_sample_size(handle) }, 4);
    assert_eq!(unsafe { pepcd_pcd_excluded(handle) }, 1);
    let mut rho_a = 0.0;
    let mut rho_and = 0.0;
    let mut rho_or = 0.0;
    unsafe {
        assert_eq!(pepcd_pcd_density(handle, 0, &mut rho_a), PepcdStatus::Ok);
        assert_eq!(pepcd_pcd_density(handle, 1, &mut rho_and), PepcdStatus::Ok);
        assert_eq!(pepcd_pcd_density(handle, 2, &mut rho_or), PepcdStatus::Ok);
        assert_eq!(pepcd_pcd_density(handle, 9, &mut rho_or), PepcdStatus::InvalidArgument);
    }
    assert!((rho_a - (rho_and + rho_or) / 2.0).abs() < 1e-15);
    let (mut value, mut exact) = (0usize, false);
    unsafe {
        assert_eq!(
            pepcd_pcd_domination(handle, 0, 5, &mut value, &mut exact),
            PepcdStatus::Ok
        );
    }
    assert!(exact && (1..=3).contains(&value));
    unsafe { pepcd_pcd_free(handle) };
}

#[test]
fn csr_over_ffi() {
    // anchors forming two triangles, uniform-ish points inside
    let ys: Vec<f64> = vec![0.0, 0.0, 2.0, 0.0, 2.0, 2.0, 0.0, 2.0];
    let mut xs = Vec::new();
    let mut s = 0x1234_5678_u64;
    let mut rnd = move || {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        (s >> 11) as f64 / (1u64 << 53) as f64
    };
    for _ in 0..100 {
        xs.push(rnd() * 2.0);
        xs.push(rnd() * 2.0);
    }
    let mut out = PepcdCsrResult {
        observed: 0.0,
        null_mean: 0.0,
        null_variance: 0.0,
        z: 0.0,
        p_lower: 0.0,
        p_upper: 0.0,
        p_two_sided: 0.0,
        n: 0,
        m: 0,
        excluded: 0,
    };
    let status =
        unsafe { pepcd_csr_test(xs.as_ptr(), 100, ys.as_ptr(), 4, 2.0, 1, &mut out) };
    assert_eq!(status, PepcdStatus::Ok);
    assert_eq!(out.n, 100);
    assert_eq!(out.m, 4);
    assert!((out.p_lower + out.p_upper - 1.0).abs() < 1e-12);
    assert!(out.null_variance > 0.0);
    // r = inf refused
    let status = unsafe {
        pepcd_csr_test(xs.as_ptr(), 100, ys.as_ptr(), 4, f64::INFINITY, 1, &mut out)
    };
    assert_eq!(status, PepcdStatus::DegenerateLimit);
}

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header_dir = manifest.join("include");
    assert!(header_dir.join("pepcd.h").exists(), "generated header missing");
    // the staticlib for this crate is built alongside the test binary
    let profile_dir = {
        let mut p = std::env::current_exe().unwrap();
        p.pop(); // test binary
        p.pop(); // deps/
        p
    };
    let lib = profile_dir.join("libpepcd_ffi.a");
    assert!(lib.exists(), "staticlib not found at {lib:?}");

    let dir = std::env::temp_dir().join(format!("pepcd-cabi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("smoke.c");
    std::fs::write(
        &src,
        r#"
#include <math.h>
#include <stdio.h>
#include <string.h>
#include "pepcd.h"

int main(void) {
    double p;
    if (pepcd_mean(PEPCD_KIND_AND, 2.0, &p) != PEPCD_STATUS_OK) return 1;
    if (fabs(p - 11.0 / 24.0) > 1e-15) return 2;
    if (pepcd_mean(PEPCD_KIND_AND, 0.25, &p) != PEPCD_STATUS_INVALID_ARGUMENT) return 3;
    if (strlen(pepcd_last_error()) == 0) return 4;

    double xs[8] = {0.2, 0.1, 0.5, 0.3, 0.7, 0.1, 0.45, 0.6};
    double ys[6] = {0.0, 0.0, 1.0, 0.0, 0.5, 0.8660254037844386};
    PepcdPcd *pcd = NULL;
    if (pepcd_pcd_build(xs, 4, ys, 3, 2.0, false, &pcd) != PEPCD_STATUS_OK) return 5;
    double rho;
    if (pepcd_pcd_density(pcd, PEPCD_KIND_OR, &rho) != PEPCD_STATUS_OK) return 6;
    if (rho < 0.0 || rho > 1.0) return 7;
    pepcd_pcd_free(pcd);
    printf("p_and(2) = %.17g, rho_or = %.17g\n", p, rho);
    return 0;
}
"#,
    )
    .unwrap();
    let exe = dir.join("smoke");
    let cc = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&header_dir)
        .arg(&lib)
        .arg("-lm")
        .arg("-lpthread")
        .arg("-ldl")
        .arg("-o")
        .arg(&exe)
        .output()
        .expect("invoke cc");
    assert!(
        cc.status.success(),
        "compile failed:\n{}",
        String::from_utf8_lossy(&cc.stderr)
    );
    let run = Command::new(&exe).output().expect("run smoke test");
    assert!(
        run.status.success(),
        "smoke test exit {:?}: {}",
        run.status.code(),
        String::from_utf8_lossy(&run.stderr)
    );
}
