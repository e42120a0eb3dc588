//! Writes the derivation corpus to `<dir>/*.prf` (default `proofs`).

use std::path::PathBuf;

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "proofs".into()));
    std::fs::create_dir_all(&dir)?;
    for e in kwl_core::proof::corpus() {
        std::fs::write(dir.join(e.file), e.file_text())?;
        println!("{}", e.file);
    }
    Ok(())
}
