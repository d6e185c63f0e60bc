// Compiles and runs a small C program against the generated header and the static library.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "cyquiv.h"

int main(void) {
    CyqSeries *plane = NULL, *mm = NULL;
    if (cyq_series_count("plane", 10, 0, &plane) != CYQ_STATUS_OK) return 10;
    if (cyq_series_macmahon(10, &mm) != CYQ_STATUS_OK) return 11;
    bool eq = false;
    if (cyq_series_compare(plane, mm, 10, &eq) != CYQ_STATUS_OK || !eq) return 12;
    int64_t e[1] = {10};
    char *c = NULL;
    if (cyq_series_coefficient(plane, e, 1, &c) != CYQ_STATUS_OK) return 13;
    if (strcmp(c, "500") != 0) return 14;
    cyq_string_free(c);
    CyqMonad *m = NULL;
    if (cyq_monad_load("ny3d", &m) != CYQ_STATUS_OK) return 15;
    size_t n = 0;
    if (cyq_monad_certify(m, true, &n) != CYQ_STATUS_OK || n == 0) return 16;
    cyq_monad_free(m);
    if (cyq_monad_load("y30", &m) != CYQ_STATUS_NOT_IN_CATALOG) return 17;
    char *err = cyq_last_error();
    if (err == NULL) return 18;
    cyq_string_free(err);
    cyq_series_free(plane);
    cyq_series_free(mm);
    printf("ok %s\n", cyq_version());
    return 0;
}
"#;

#[test]
fn c_program_links_against_staticlib() {
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler on PATH; skipping");
        return;
    };
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/<test> -> target/<profile>
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libcyquiv_ffi.a");
    assert!(lib.exists(), "missing {}", lib.display());
    let work = std::env::temp_dir().join(format!("cyquiv-c-{}", std::process::id()));
    std::fs::create_dir_all(&work).unwrap();
    let src = work.join("main.c");
    std::fs::write(&src, PROGRAM).unwrap();
    let exe = work.join("main");
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "C program exited with {:?}", out.status.code());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok "));
    std::fs::remove_dir_all(&work).unwrap();
}

fn which_cc() -> Result<String, ()> {
    for c in ["cc", "gcc", "clang"] {
        if Command::new(c).arg("--version").output().is_ok_and(|o| o.status.success()) {
            return Ok(c.to_string());
        }
    }
    Err(())
}
