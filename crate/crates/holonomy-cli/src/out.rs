//! Output encoding: atomic file writes and 17-significant-digit CSV.

use std::io::Write;
use std::path::Path;

/// Round-trip-safe decimal form of a double.
pub fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn csv_rows<'a, I>(rows: I) -> String
where
    I: IntoIterator<Item = &'a [f64]>,
{
    let mut text = String::new();
    for row in rows {
        for (i, x) in row.iter().enumerate() {
            if i > 0 {
                text.push(',');
            }
            text.push_str(&sig17(*x));
        }
        text.push('\n');
    }
    text
}

/// Writes via a sibling temp file and a final rename, so readers never
/// observe a half-written output.
pub fn atomic_write(path: &Path, bytes: &[u8]) -> Result<(), String> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .map_err(|e| format!("cannot create temp file near {}: {e}", path.display()))?;
    tmp.write_all(bytes)
        .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    tmp.persist(path)
        .map_err(|e| format!("cannot finalize {}: {e}", path.display()))?;
    Ok(())
}
