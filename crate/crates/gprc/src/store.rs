//! On-disk class files.
//!
//! A class file is a header line
//! `#gprc v1 kind=<rauzy|extended> seed=<canonical perm> count=<N>`
//! followed by the N members, one canonical permutation per line, sorted by
//! their text. UTF-8, LF line endings.

use std::fs;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use gprc_core::rauzy::{ClassKind, Word};
use gprc_core::GeneralizedPermutation;
use sha2::{Digest, Sha256};

/// Environment variable naming the store directory.
pub const CACHE_DIR_VAR: &str = "GPRC_CACHE_DIR";

fn invalid(msg: impl Into<String>) -> io::Error {
    io::Error::new(io::ErrorKind::InvalidData, msg.into())
}

fn kind_from_name(name: &str) -> Option<ClassKind> {
    match name {
        "rauzy" => Some(ClassKind::Rauzy),
        "extended" => Some(ClassKind::Extended),
        _ => None,
    }
}

/// Writes a class file. `members` must already be sorted by text.
pub fn write_class<W: Write>(out: W, kind: ClassKind, seed: &GeneralizedPermutation, members: &[Word]) -> io::Result<()> {
    let mut out = BufWriter::new(out);
    writeln!(out, "#gprc v1 kind={} seed={} count={}", kind.name(), seed.canonical(), members.len())?;
    let mut line = String::new();
    for w in members {
        line.clear();
        w.write_text(&mut line);
        line.push('\n');
        out.write_all(line.as_bytes())?;
    }
    out.flush()
}

/// Header of a class file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Header {
    pub kind: ClassKind,
    pub seed: GeneralizedPermutation,
    pub count: usize,
}

fn parse_header(line: &str) -> io::Result<Header> {
    let rest = line.strip_prefix("#gprc v1 kind=").ok_or_else(|| invalid("missing class file header"))?;
    let (kind, rest) = rest.split_once(" seed=").ok_or_else(|| invalid("header lacks seed"))?;
    let (seed, count) = rest.rsplit_once(" count=").ok_or_else(|| invalid("header lacks count"))?;
    Ok(Header {
        kind: kind_from_name(kind).ok_or_else(|| invalid(format!("unknown kind {kind:?}")))?,
        seed: seed.parse().map_err(|e| invalid(format!("bad seed: {e}")))?,
        count: count.parse().map_err(|_| invalid("bad count"))?,
    })
}

/// Reads a class file, checking the member count and ordering.
pub fn read_class<R: BufRead>(input: R) -> io::Result<(Header, Vec<Word>)> {
    let mut lines = input.lines();
    let header = parse_header(&lines.next().ok_or_else(|| invalid("empty class file"))??)?;
    let mut members = Vec::with_capacity(header.count);
    let mut previous: Option<String> = None;
    for line in lines {
        let line = line?;
        let p: GeneralizedPermutation = line.parse().map_err(|e| invalid(format!("bad member {line:?}: {e}")))?;
        let w = Word::from_perm(&p).map_err(|e| invalid(e.to_string()))?;
        if w.text() != line {
            return Err(invalid(format!("member {line:?} is not canonical")));
        }
        if previous.as_deref().is_some_and(|prev| prev >= line.as_str()) {
            return Err(invalid(format!("member {line:?} out of order")));
        }
        members.push(w);
        previous = Some(line);
    }
    if members.len() != header.count {
        return Err(invalid(format!("header says {} members, found {}", header.count, members.len())));
    }
    Ok((header, members))
}

/// A directory of class files keyed by kind and canonical seed.
#[derive(Clone, Debug)]
pub struct ClassStore {
    dir: PathBuf,
}

impl ClassStore {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        ClassStore { dir: dir.into() }
    }

    /// The store named by `GPRC_CACHE_DIR`, if set.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_DIR_VAR).filter(|v| !v.is_empty()).map(Self::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Seeds can be long, so files are named by a digest of the seed text.
    pub fn path(&self, kind: ClassKind, seed: &GeneralizedPermutation) -> PathBuf {
        let digest = Sha256::digest(seed.canonical().to_string().as_bytes());
        let hex: String = digest.iter().take(12).map(|b| format!("{b:02x}")).collect();
        self.dir.join(format!("{}-{hex}.gprc", kind.name()))
    }

    /// Writes the class; the file appears atomically under its final name.
    pub fn save(&self, kind: ClassKind, seed: &GeneralizedPermutation, members: &[Word]) -> io::Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path(kind, seed);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        write_class(fs::File::create(&tmp)?, kind, seed, members)?;
        fs::rename(&tmp, &path)?;
        Ok(path)
    }

    /// The stored class, if present. Any member of a class may be used as
    /// the seed only if it was the seed when saved; lookups are by seed.
    pub fn load(&self, kind: ClassKind, seed: &GeneralizedPermutation) -> io::Result<Option<Vec<Word>>> {
        let path = self.path(kind, seed);
        let file = match fs::File::open(&path) {
            Ok(f) => f,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e),
        };
        let (header, members) = read_class(BufReader::new(file))?;
        if header.kind != kind || header.seed != *seed {
            return Err(invalid(format!("{} holds a different class", path.display())));
        }
        Ok(Some(members))
    }

    /// Only the header of a stored class.
    pub fn load_header(&self, kind: ClassKind, seed: &GeneralizedPermutation) -> io::Result<Option<Header>> {
        let file = match fs::File::open(self.path(kind, seed)) {
            Ok(f) => f,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e),
        };
        let mut first = String::new();
        BufReader::new(file).read_line(&mut first)?;
        parse_header(first.trim_end_matches('\n')).map(Some)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gprc_core::rauzy::{enumerate, sort_members};

    #[test]
    fn bit_exact_file() {
        let seed: GeneralizedPermutation = "0 1 2 / 2 1 0".parse().unwrap();
        let members = sort_members(enumerate(&Word::from_perm(&seed).unwrap(), ClassKind::Rauzy).into_iter().collect());
        let mut buf = Vec::new();
        write_class(&mut buf, ClassKind::Rauzy, &seed, &members).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(text, "#gprc v1 kind=rauzy seed=0 1 2 / 2 1 0 count=3\n0 1 2 / 1 2 0\n0 1 2 / 2 0 1\n0 1 2 / 2 1 0\n");
        let (header, back) = read_class(&buf[..]).unwrap();
        assert_eq!(header, Header { kind: ClassKind::Rauzy, seed, count: 3 });
        assert_eq!(back, members);
    }

    #[test]
    fn rejects_damaged_files() {
        for bad in [
            "",
            "#gprc v2 kind=rauzy seed=0 / 0 count=0\n",
            "#gprc v1 kind=rauzy seed=0 1 / 1 0 count=2\n0 1 / 1 0\n",
            "#gprc v1 kind=weird seed=0 1 / 1 0 count=1\n0 1 / 1 0\n",
            "#gprc v1 kind=rauzy seed=0 1 / 1 0 count=1\n1 0 / 0 1\n",
        ] {
            assert!(read_class(bad.as_bytes()).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn store_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let store = ClassStore::new(dir.path());
        let seed: GeneralizedPermutation = "0 1 1 / 2 2 0".parse().unwrap();
        assert_eq!(store.load(ClassKind::Extended, &seed).unwrap(), None);
        let members = sort_members(enumerate(&Word::from_perm(&seed).unwrap(), ClassKind::Extended).into_iter().collect());
        let path = store.save(ClassKind::Extended, &seed, &members).unwrap();
        assert!(path.starts_with(dir.path()));
        assert_eq!(store.load(ClassKind::Extended, &seed).unwrap(), Some(members.clone()));
        assert_eq!(store.load_header(ClassKind::Extended, &seed).unwrap().unwrap().count, members.len());
        assert_eq!(store.load(ClassKind::Rauzy, &seed).unwrap(), None);
    }
}
