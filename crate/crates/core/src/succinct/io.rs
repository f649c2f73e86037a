//! Little-endian primitives shared by every binary block in the index file.

use std::io::{Read, Write};

use crate::error::{Error, Result};

pub(crate) fn write_u16<W: Write>(w: &mut W, v: u16) -> Result<()> {
    w.write_all(&v.to_le_bytes())?;
    Ok(())
}

pub(crate) fn write_u64<W: Write>(w: &mut W, v: u64) -> Result<()> {
    w.write_all(&v.to_le_bytes())?;
    Ok(())
}

pub(crate) fn read_u16<R: Read>(r: &mut R) -> Result<u16> {
    let mut buf = [0u8; 2];
    r.read_exact(&mut buf)?;
    Ok(u16::from_le_bytes(buf))
}

pub(crate) fn read_u64<R: Read>(r: &mut R) -> Result<u64> {
    let mut buf = [0u8; 8];
    r.read_exact(&mut buf)?;
    Ok(u64::from_le_bytes(buf))
}

pub(crate) fn write_words<W: Write>(w: &mut W, words: &[u64]) -> Result<()> {
    write_u64(w, words.len() as u64)?;
    for &x in words {
        w.write_all(&x.to_le_bytes())?;
    }
    Ok(())
}

pub(crate) fn read_words<R: Read>(r: &mut R) -> Result<Vec<u64>> {
    let n = read_u64(r)? as usize;
    let mut words = Vec::with_capacity(n.min(1 << 20));
    for _ in 0..n {
        words.push(read_u64(r)?);
    }
    Ok(words)
}

pub(crate) fn expect_magic<R: Read>(r: &mut R, magic: &[u8; 4], version: u16) -> Result<()> {
    let mut buf = [0u8; 4];
    r.read_exact(&mut buf)?;
    if &buf != magic {
        return Err(Error::Format(format!(
            "expected block {:?}, found {:?}",
            String::from_utf8_lossy(magic),
            String::from_utf8_lossy(&buf)
        )));
    }
    let found = read_u16(r)?;
    if found != version {
        return Err(Error::Version { found, expected: version });
    }
    Ok(())
}

pub(crate) fn write_magic<W: Write>(w: &mut W, magic: &[u8; 4], version: u16) -> Result<()> {
    w.write_all(magic)?;
    write_u16(w, version)
}
