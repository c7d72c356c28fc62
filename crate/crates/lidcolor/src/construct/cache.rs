//! On-disk tile cache: one JSON file per tile, created exclusively, never
//! rewritten. Callers revalidate loaded tiles before trusting them.

use std::fs;
use std::path::{Path, PathBuf};

use super::tile::Tile;
use crate::error::{Error, Result};

pub(crate) const CACHE_ENV: &str = "LIDCOLOR_CACHE_DIR";

/// The cache directory: `LIDCOLOR_CACHE_DIR` or `./.lidcolor-cache`.
pub(crate) fn cache_dir() -> PathBuf {
    std::env::var_os(CACHE_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("./.lidcolor-cache"))
}

pub(crate) fn load_tile_from(dir: &Path, name: &str) -> Result<Option<Tile>> {
    let path = dir.join(format!("{name}.json"));
    let data = match fs::read_to_string(&path) {
        Ok(d) => d,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(Error::Cache(format!("reading {}: {e}", path.display()))),
    };
    let tile: Tile = serde_json::from_str(&data)
        .map_err(|e| Error::Cache(format!("parsing {}: {e}", path.display())))?;
    if tile.name != name {
        return Err(Error::Cache(format!(
            "{} holds a tile named {:?}",
            path.display(),
            tile.name
        )));
    }
    Ok(Some(tile))
}

/// Writes a tile once: the JSON lands in a temp file that is hard-linked to
/// its final name, so exactly one writer ever creates the file and an
/// existing file is left untouched.
pub(crate) fn store_tile_in(dir: &Path, tile: &Tile) -> Result<()> {
    fs::create_dir_all(dir)
        .map_err(|e| Error::Cache(format!("creating {}: {e}", dir.display())))?;
    let path = dir.join(format!("{}.json", tile.name));
    if path.exists() {
        return Ok(());
    }
    let tmp = dir.join(format!(".{}.tmp-{}", tile.name, std::process::id()));
    let json = serde_json::to_vec_pretty(tile)?;
    fs::write(&tmp, json).map_err(|e| Error::Cache(format!("writing {}: {e}", tmp.display())))?;
    let linked = fs::hard_link(&tmp, &path);
    let _ = fs::remove_file(&tmp);
    match linked {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::AlreadyExists => Ok(()),
        Err(e) => Err(Error::Cache(format!("publishing {}: {e}", path.display()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::tile::Topology;

    fn sample(name: &str, marker: u32) -> Tile {
        Tile {
            name: name.into(),
            rows: 1,
            cols: 2,
            row_topology: Topology::Open,
            col_topology: Topology::Open,
            cells: vec![vec![1, marker]],
            colors: marker,
        }
    }

    #[test]
    fn round_trips_through_disk() {
        let dir = tempfile::tempdir().unwrap();
        assert!(load_tile_from(dir.path(), "t").unwrap().is_none());
        let tile = sample("t", 2);
        store_tile_in(dir.path(), &tile).unwrap();
        assert_eq!(load_tile_from(dir.path(), "t").unwrap().unwrap(), tile);
    }

    #[test]
    fn first_write_wins() {
        let dir = tempfile::tempdir().unwrap();
        store_tile_in(dir.path(), &sample("t", 2)).unwrap();
        store_tile_in(dir.path(), &sample("t", 3)).unwrap();
        assert_eq!(load_tile_from(dir.path(), "t").unwrap().unwrap().colors, 2);
    }

    #[test]
    fn rejects_corrupt_or_misnamed_files() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("bad.json"), b"{ not json").unwrap();
        assert!(matches!(
            load_tile_from(dir.path(), "bad"),
            Err(Error::Cache(_))
        ));
        store_tile_in(dir.path(), &sample("actual", 2)).unwrap();
        fs::rename(
            dir.path().join("actual.json"),
            dir.path().join("renamed.json"),
        )
        .unwrap();
        assert!(matches!(
            load_tile_from(dir.path(), "renamed"),
            Err(Error::Cache(_))
        ));
    }
}
