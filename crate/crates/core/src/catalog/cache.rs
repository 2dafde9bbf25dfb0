//! On-disk catalog cache.
//!
//! One `degree-<d>.cov` file per degree. Each entry is a header line
//! `SYMBOL d mu1 mu2 mu3 mu4 nterms` followed by `nterms` lines, one
//! canonical term per line in descending graded-lex order. `index.txt`
//! maps every cached symbol to its file and the byte offset of its header.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Read, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};

use crate::algebra::Integer;
use crate::poly::{parse_term, render_term, IntPoly, MultiDegree, Poly};

use super::{CatalogError, CovariantSymbol};

pub const INDEX_FILE: &str = "index.txt";

pub fn degree_file(dir: &Path, degree: u8) -> PathBuf {
    dir.join(format!("degree-{degree}.cov"))
}

fn io_err(path: &Path, e: std::io::Error) -> CatalogError {
    CatalogError::Cache(format!("{}: {e}", path.display()))
}

fn corrupt(path: &Path, what: impl std::fmt::Display) -> CatalogError {
    CatalogError::Cache(format!("{}: {what}", path.display()))
}

/// Write one degree layer; returns (symbol, byte offset) for the index.
pub fn write_degree(
    dir: &Path,
    degree: u8,
    entries: &[(CovariantSymbol, &IntPoly)],
) -> Result<Vec<(CovariantSymbol, u64)>, CatalogError> {
    fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
    let path = degree_file(dir, degree);
    let tmp = path.with_extension("cov.tmp");
    let file = fs::File::create(&tmp).map_err(|e| io_err(&tmp, e))?;
    let mut w = BufWriter::new(file);
    let mut offset = 0u64;
    let mut offsets = Vec::with_capacity(entries.len());
    for (sym, poly) in entries {
        let md = sym.multidegree();
        let header = format!(
            "{} {} {} {} {} {} {}\n",
            sym, md.d, md.mu[0], md.mu[1], md.mu[2], md.mu[3], poly.len()
        );
        offsets.push((*sym, offset));
        w.write_all(header.as_bytes()).map_err(|e| io_err(&tmp, e))?;
        offset += header.len() as u64;
        for (m, c) in poly.terms() {
            let line = render_term(m, c);
            w.write_all(line.as_bytes()).map_err(|e| io_err(&tmp, e))?;
            w.write_all(b"\n").map_err(|e| io_err(&tmp, e))?;
            offset += line.len() as u64 + 1;
        }
    }
    w.flush().map_err(|e| io_err(&tmp, e))?;
    drop(w);
    fs::rename(&tmp, &path).map_err(|e| io_err(&path, e))?;
    Ok(offsets)
}

fn parse_header(path: &Path, line: &str) -> Result<(CovariantSymbol, MultiDegree, usize), CatalogError> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 7 {
        return Err(corrupt(path, format!("bad entry header {line:?}")));
    }
    let sym: CovariantSymbol = fields[0].parse()?;
    let nums: Vec<u32> = fields[1..]
        .iter()
        .map(|s| s.parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| corrupt(path, format!("bad entry header {line:?}")))?;
    let md = MultiDegree::new(nums[0], [nums[1], nums[2], nums[3], nums[4]]);
    if md != sym.multidegree() {
        return Err(corrupt(path, format!("header multidegree disagrees with symbol {sym}")));
    }
    Ok((sym, md, nums[5] as usize))
}

fn read_entry<R: BufRead>(
    path: &Path,
    reader: &mut R,
    header: &str,
) -> Result<(CovariantSymbol, IntPoly), CatalogError> {
    let (sym, md, nterms) = parse_header(path, header)?;
    let mut terms = Vec::with_capacity(nterms);
    let mut line = String::new();
    for _ in 0..nterms {
        line.clear();
        if reader.read_line(&mut line).map_err(|e| io_err(path, e))? == 0 {
            return Err(corrupt(path, format!("truncated entry {sym}")));
        }
        let (m, c) = parse_term::<Integer>(line.trim_end()).map_err(|e| corrupt(path, e))?;
        terms.push((m, c));
    }
    let canonical = terms.windows(2).all(|w| w[0].0 > w[1].0) && terms.iter().all(|(_, c)| !c.is_zero());
    if !canonical {
        return Err(corrupt(path, format!("entry {sym} is not in canonical order")));
    }
    let poly = Poly::from_sorted_unchecked(terms);
    if poly.multidegree() != Some(md) {
        return Err(corrupt(path, format!("entry {sym} has the wrong multidegree")));
    }
    Ok((sym, poly))
}

/// Read a whole degree file, or `None` if it does not exist.
pub fn read_degree(dir: &Path, degree: u8) -> Result<Option<Vec<(CovariantSymbol, IntPoly)>>, CatalogError> {
    let path = degree_file(dir, degree);
    let file = match fs::File::open(&path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(io_err(&path, e)),
    };
    let mut reader = BufReader::with_capacity(1 << 20, file);
    let mut out = Vec::new();
    let mut header = String::new();
    loop {
        header.clear();
        if reader.read_line(&mut header).map_err(|e| io_err(&path, e))? == 0 {
            break;
        }
        out.push(read_entry(&path, &mut reader, header.trim_end())?);
    }
    Ok(Some(out))
}

/// Symbol -> (file name, byte offset).
pub fn read_index(dir: &Path) -> Result<BTreeMap<CovariantSymbol, (String, u64)>, CatalogError> {
    let path = dir.join(INDEX_FILE);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(BTreeMap::new()),
        Err(e) => return Err(io_err(&path, e)),
    };
    let mut out = BTreeMap::new();
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 3 {
            return Err(corrupt(&path, format!("bad index line {line:?}")));
        }
        let off = f[2].parse::<u64>().map_err(|_| corrupt(&path, format!("bad offset in {line:?}")))?;
        out.insert(f[0].parse()?, (f[1].to_string(), off));
    }
    Ok(out)
}

/// Replace the index entries of `degree` and rewrite the index file.
pub fn update_index(dir: &Path, degree: u8, offsets: &[(CovariantSymbol, u64)]) -> Result<(), CatalogError> {
    let mut index = read_index(dir)?;
    index.retain(|s, _| s.degree != degree);
    let fname = format!("degree-{degree}.cov");
    for (s, off) in offsets {
        index.insert(*s, (fname.clone(), *off));
    }
    let path = dir.join(INDEX_FILE);
    let tmp = dir.join("index.txt.tmp");
    let mut body = String::new();
    for (s, (file, off)) in &index {
        body.push_str(&format!("{s} {file} {off}\n"));
    }
    fs::write(&tmp, body).map_err(|e| io_err(&tmp, e))?;
    fs::rename(&tmp, &path).map_err(|e| io_err(&path, e))
}

/// Load a single entry through the index without reading the whole file.
pub fn load_entry(dir: &Path, symbol: &CovariantSymbol) -> Result<Option<IntPoly>, CatalogError> {
    let index = read_index(dir)?;
    let Some((file, off)) = index.get(symbol) else { return Ok(None) };
    let path = dir.join(file);
    let mut f = fs::File::open(&path).map_err(|e| io_err(&path, e))?;
    f.seek(SeekFrom::Start(*off)).map_err(|e| io_err(&path, e))?;
    let mut reader = BufReader::new(f.take(u64::MAX));
    let mut header = String::new();
    reader.read_line(&mut header).map_err(|e| io_err(&path, e))?;
    let (sym, poly) = read_entry(&path, &mut reader, header.trim_end())?;
    if sym != *symbol {
        return Err(corrupt(&path, format!("index points at {sym}, expected {symbol}")));
    }
    Ok(Some(poly))
}
