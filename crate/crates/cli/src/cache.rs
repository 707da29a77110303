//! Best-effort disk cache for computed records. Entries are keyed by
//! (canonical graph, operation, parameters) baked into a hashed filename;
//! any read or write problem is treated as a miss so a broken cache can
//! never change results, only slow them down.

use std::fs;
use std::path::PathBuf;

use serde::de::DeserializeOwned;
use serde::Serialize;
use sha2::{Digest, Sha256};

const FORMAT_VERSION: &str = "v1";

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    /// Cache rooted at `EDGEAL_CACHE_DIR`, falling back to a fixed directory
    /// under the system temp dir.
    pub fn open() -> Cache {
        let dir = match std::env::var_os("EDGEAL_CACHE_DIR") {
            Some(d) => PathBuf::from(d),
            None => std::env::temp_dir().join("edgeal-cache"),
        };
        Cache { dir }
    }

    fn path_for(&self, key: &str) -> PathBuf {
        let digest = Sha256::digest(format!("{FORMAT_VERSION}|{key}").as_bytes());
        let mut name = String::with_capacity(64 + 5);
        for byte in digest {
            name.push_str(&format!("{byte:02x}"));
        }
        name.push_str(".json");
        self.dir.join(name)
    }

    pub fn get<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let text = fs::read_to_string(self.path_for(key)).ok()?;
        serde_json::from_str(&text).ok()
    }

    pub fn put<T: Serialize>(&self, key: &str, value: &T) {
        if fs::create_dir_all(&self.dir).is_err() {
            return;
        }
        let path = self.path_for(key);
        let tmp = path.with_extension("tmp");
        let Ok(text) = serde_json::to_string(value) else {
            return;
        };
        // write-then-rename keeps concurrent readers from seeing half a file
        if fs::write(&tmp, text).is_ok() {
            let _ = fs::rename(&tmp, &path);
        }
    }
}
