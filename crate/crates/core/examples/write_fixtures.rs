//! Regenerates the JSON files under `fixtures/`.

use std::path::PathBuf;

fn main() -> std::io::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures"));
    std::fs::create_dir_all(&dir)?;
    for (name, doc) in ternalg::io::fixture_files() {
        std::fs::write(dir.join(name), ternalg::io::to_json(&doc))?;
        println!("wrote {}", dir.join(name).display());
    }
    Ok(())
}
