//! Compiles a small C program against the generated header and the static
//! library. Skipped when no C compiler is on the path.

use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "matex.h"

int main(void) {
    MatexPatternSet *set = NULL;
    MatexMatrix *witness = NULL;
    MatexExtremal r;
    if (matex_patterns_parse("11\n11", &set) != MATEX_STATUS_OK) return 1;
    if (matex_ex_columns(3, 2, set, 0, &r, &witness) != MATEX_STATUS_OK) return 2;
    if (r.unbounded || r.value != 3 || !r.exact) return 3;
    char *text = NULL;
    if (matex_matrix_to_string(witness, &text) != MATEX_STATUS_OK) return 4;
    printf("%s\n", text);
    matex_string_free(text);
    matex_matrix_free(witness);
    matex_patterns_free(set);
    MatexMatrix *m = NULL;
    if (matex_matrix_parse("0x", &m) != MATEX_STATUS_PARSE) return 5;
    if (strlen(matex_last_error()) == 0) return 6;
    return 0;
}
"#;

fn static_lib() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    exe.ancestors()
        .skip(1)
        .take(3)
        .flat_map(|dir| [dir.join("libmatex_ffi.a"), dir.join("deps/libmatex_ffi.a")])
        .find(|p| p.exists())
}

#[test]
fn c_program_links_and_runs() {
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("no C compiler; skipping");
        return;
    }
    let Some(lib) = static_lib() else {
        eprintln!("static library not found next to the test binary; skipping");
        return;
    };
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("c_smoke");
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("smoke.c");
    let bin = dir.join("smoke");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "C program exited with {:?}", out.status.code());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "110\n101\n011\n");
}
