//! Binary containers: cyclic functions / spectra (little-endian f64
//! payload behind a {magic, version, N, kind} header) and the prime
//! table cache.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::fourier::{CyclicFunction, Spectrum};
use crate::primes::PrimeTable;
use rustfft::num_complex::Complex64;
use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

const FUNCTION_MAGIC: &[u8; 4] = b"CYCF";
const FUNCTION_VERSION: u32 = 1;
const KIND_REAL: u8 = 0;
const KIND_COMPLEX: u8 = 1;

const TABLE_MAGIC: &[u8; 4] = b"PRTB";
const TABLE_VERSION: u32 = 1;

fn write_function_header(w: &mut impl Write, n: u64, kind: u8) -> Result<()> {
    w.write_all(FUNCTION_MAGIC)?;
    w.write_all(&FUNCTION_VERSION.to_le_bytes())?;
    w.write_all(&n.to_le_bytes())?;
    w.write_all(&[kind])?;
    Ok(())
}

fn read_function_header(r: &mut impl Read) -> Result<(u64, u8)> {
    let mut magic = [0u8; 4];
    r.read_exact(&mut magic)?;
    if &magic != FUNCTION_MAGIC {
        return Err(Error::BadCacheFile(
            "wrong magic for function container".into(),
        ));
    }
    let mut v = [0u8; 4];
    r.read_exact(&mut v)?;
    if u32::from_le_bytes(v) != FUNCTION_VERSION {
        return Err(Error::BadCacheFile(
            "unsupported function container version".into(),
        ));
    }
    let mut n = [0u8; 8];
    r.read_exact(&mut n)?;
    let mut kind = [0u8; 1];
    r.read_exact(&mut kind)?;
    Ok((u64::from_le_bytes(n), kind[0]))
}

pub fn write_function(path: &Path, f: &CyclicFunction) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_function_header(&mut w, f.len() as u64, KIND_REAL)?;
    for v in f.values() {
        w.write_all(&v.to_le_bytes())?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_function(path: &Path) -> Result<CyclicFunction> {
    let mut r = BufReader::new(File::open(path)?);
    let (n, kind) = read_function_header(&mut r)?;
    if kind != KIND_REAL {
        return Err(Error::BadCacheFile(format!(
            "expected real payload, got kind {kind}"
        )));
    }
    let mut values = Vec::with_capacity(n as usize);
    let mut buf = [0u8; 8];
    for _ in 0..n {
        r.read_exact(&mut buf)?;
        values.push(f64::from_le_bytes(buf));
    }
    CyclicFunction::new(values)
}

pub fn write_spectrum(path: &Path, s: &Spectrum) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_function_header(&mut w, s.len() as u64, KIND_COMPLEX)?;
    for c in s.coeffs() {
        w.write_all(&c.re.to_le_bytes())?;
        w.write_all(&c.im.to_le_bytes())?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_spectrum(path: &Path) -> Result<Spectrum> {
    let mut r = BufReader::new(File::open(path)?);
    let (n, kind) = read_function_header(&mut r)?;
    if kind != KIND_COMPLEX {
        return Err(Error::BadCacheFile(format!(
            "expected complex payload, got kind {kind}"
        )));
    }
    let mut coeffs = Vec::with_capacity(n as usize);
    let mut buf = [0u8; 8];
    for _ in 0..n {
        r.read_exact(&mut buf)?;
        let re = f64::from_le_bytes(buf);
        r.read_exact(&mut buf)?;
        let im = f64::from_le_bytes(buf);
        coeffs.push(Complex64::new(re, im));
    }
    Spectrum::from_coeffs(coeffs)
}

pub fn write_prime_table(path: &Path, table: &PrimeTable) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(TABLE_MAGIC)?;
    w.write_all(&TABLE_VERSION.to_le_bytes())?;
    w.write_all(&table.limit().to_le_bytes())?;
    for word in table.bits().words() {
        w.write_all(&word.to_le_bytes())?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_prime_table(path: &Path) -> Result<PrimeTable> {
    let mut r = BufReader::new(File::open(path)?);
    let mut magic = [0u8; 4];
    r.read_exact(&mut magic)?;
    if &magic != TABLE_MAGIC {
        return Err(Error::BadCacheFile("wrong magic for prime table".into()));
    }
    let mut v = [0u8; 4];
    r.read_exact(&mut v)?;
    if u32::from_le_bytes(v) != TABLE_VERSION {
        return Err(Error::BadCacheFile(
            "unsupported prime table version".into(),
        ));
    }
    let mut lim = [0u8; 8];
    r.read_exact(&mut lim)?;
    let limit = u64::from_le_bytes(lim);
    let n_words = (limit as usize + 1).div_ceil(64);
    let mut words = Vec::with_capacity(n_words);
    let mut buf = [0u8; 8];
    for _ in 0..n_words {
        r.read_exact(&mut buf)?;
        words.push(u64::from_le_bytes(buf));
    }
    let bits = Bits::from_words(limit as usize + 1, words)
        .ok_or_else(|| Error::BadCacheFile("truncated prime table payload".into()))?;
    Ok(PrimeTable::from_bits(limit, bits))
}
