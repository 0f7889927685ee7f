use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::Result;

/// Bumped when the layout of cached payloads changes.
pub const CACHE_VERSION: u32 = 1;

/// Environment variable overriding the default cache directory.
pub const CACHE_ENV: &str = "REALCHAR_CACHE_DIR";

/// One file on disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub version: u32,
    pub engine: String,
    pub key: String,
    /// Hex SHA-256 of `payload`.
    pub checksum: String,
    pub payload: String,
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// A directory of checksummed JSON entries. A disabled cache stores nothing.
#[derive(Debug, Clone)]
pub struct Cache {
    dir: Option<PathBuf>,
    engine: String,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Self::with_engine(dir, super::ENGINE_VERSION)
    }

    pub fn with_engine(dir: Option<PathBuf>, engine: &str) -> Self {
        Cache {
            dir,
            engine: engine.to_string(),
        }
    }

    /// Flag first, then the environment variable, then the platform cache.
    pub fn resolve(flag: Option<PathBuf>) -> Self {
        let dir = flag
            .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
            .or_else(|| dirs::cache_dir().map(|d| d.join("realchar")));
        Cache::new(dir)
    }

    pub fn disabled() -> Self {
        Cache::new(None)
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    /// Cache key for a computation kind on a canonical group label.
    pub fn key(&self, kind: &str, label: &str) -> String {
        sha256_hex(format!("{kind}\n{label}\n{}\n{CACHE_VERSION}", self.engine).as_bytes())
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.json")))
    }

    /// Loads and validates an entry. Anything that fails to parse, has the
    /// wrong version or a bad checksum is deleted and reported as a miss.
    pub fn load<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let path = self.path(key)?;
        let text = fs::read_to_string(&path).ok()?;
        let valid = serde_json::from_str::<CacheEntry>(&text).ok().filter(|e| {
            e.version == CACHE_VERSION
                && e.engine == self.engine
                && e.key == key
                && e.checksum == sha256_hex(e.payload.as_bytes())
        });
        match valid.and_then(|e| serde_json::from_str(&e.payload).ok()) {
            Some(v) => Some(v),
            None => {
                let _ = fs::remove_file(&path);
                None
            }
        }
    }

    pub fn store<T: Serialize>(&self, key: &str, value: &T) -> Result<()> {
        let Some(path) = self.path(key) else {
            return Ok(());
        };
        let payload = serde_json::to_string(value)?;
        let entry = CacheEntry {
            version: CACHE_VERSION,
            engine: self.engine.clone(),
            key: key.to_string(),
            checksum: sha256_hex(payload.as_bytes()),
            payload,
        };
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent)?;
        }
        // Write then rename so readers never see a half-written file.
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, serde_json::to_vec(&entry)?)?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }
}
