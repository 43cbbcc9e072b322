//! 8-bit single-channel label images: binary PGM (P5, also ASCII P2 on
//! read) and grayscale PNG. Pixel value = label id.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use image::{DynamicImage, ImageFormat as CodecFormat};

use crate::error::{Error, Result};
use crate::mask::LabelMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImageFormat {
    Pgm,
    Png,
}

impl ImageFormat {
    pub fn from_path(path: &Path) -> Option<Self> {
        let ext = path.extension()?.to_str()?;
        ext.parse().ok()
    }

    pub fn extension(self) -> &'static str {
        match self {
            ImageFormat::Pgm => "pgm",
            ImageFormat::Png => "png",
        }
    }
}

impl FromStr for ImageFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "pgm" | "pnm" => Ok(ImageFormat::Pgm),
            "png" => Ok(ImageFormat::Png),
            other => Err(format!("unknown image format {other:?}")),
        }
    }
}

fn resolve(path: &Path, format: Option<ImageFormat>) -> Result<ImageFormat> {
    format.or_else(|| ImageFormat::from_path(path)).ok_or_else(|| Error::UnsupportedPixelFormat {
        path: path.to_owned(),
        detail: "cannot infer format from extension (expected .pgm or .png)".into(),
    })
}

/// Reads a label map; `format` defaults to the file extension.
pub fn load_label_map(path: impl AsRef<Path>, format: Option<ImageFormat>) -> Result<LabelMap> {
    let path = path.as_ref();
    let format = resolve(path, format)?;
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    match format {
        ImageFormat::Pgm => decode_pgm(&bytes, path),
        ImageFormat::Png => decode_png(&bytes, path),
    }
}

pub fn save_label_map(map: &LabelMap, path: impl AsRef<Path>, format: Option<ImageFormat>) -> Result<()> {
    let path = path.as_ref();
    let bytes = match resolve(path, format)? {
        ImageFormat::Pgm => encode_pgm(map)?,
        ImageFormat::Png => encode_png(map)?,
    };
    fs::write(path, bytes).map_err(|e| Error::io(path, e))
}

fn to_bytes(map: &LabelMap) -> Result<Vec<u8>> {
    map.labels().iter().map(|&l| u8::try_from(l).map_err(|_| Error::LabelOutOfRange(l))).collect()
}

pub fn encode_pgm(map: &LabelMap) -> Result<Vec<u8>> {
    let mut out = format!("P5\n{} {}\n255\n", map.width(), map.height()).into_bytes();
    out.extend(to_bytes(map)?);
    Ok(out)
}

fn encode_png(map: &LabelMap) -> Result<Vec<u8>> {
    let img = image::GrayImage::from_raw(map.width() as u32, map.height() as u32, to_bytes(map)?)
        .expect("buffer length matches dimensions");
    let mut out = std::io::Cursor::new(Vec::new());
    img.write_to(&mut out, CodecFormat::Png)
        .map_err(|e| Error::Decode { path: "<memory>".into(), detail: e.to_string() })?;
    Ok(out.into_inner())
}

fn decode_png(bytes: &[u8], path: &Path) -> Result<LabelMap> {
    let img = image::load_from_memory_with_format(bytes, CodecFormat::Png)
        .map_err(|e| Error::Decode { path: path.to_owned(), detail: e.to_string() })?;
    match img {
        DynamicImage::ImageLuma8(buf) => {
            let (w, h) = buf.dimensions();
            LabelMap::new(w as usize, h as usize, buf.into_raw().into_iter().map(u32::from).collect())
        }
        other => Err(Error::UnsupportedPixelFormat { path: path.to_owned(), detail: format!("{:?}", other.color()) }),
    }
}

/// Splits the PGM header into whitespace-separated tokens, skipping `#`
/// comments, and returns the offset just past the whitespace byte that
/// terminates the fourth token.
fn pgm_header(bytes: &[u8]) -> Option<([&[u8]; 4], usize)> {
    let mut tokens: [&[u8]; 4] = [&[]; 4];
    let mut i = 0;
    for slot in tokens.iter_mut() {
        loop {
            match bytes.get(i)? {
                b'#' => {
                    while *bytes.get(i)? != b'\n' {
                        i += 1;
                    }
                }
                c if c.is_ascii_whitespace() => i += 1,
                _ => break,
            }
        }
        let start = i;
        while i < bytes.len() && !bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        *slot = &bytes[start..i];
    }
    // exactly one whitespace byte separates the header from the raster
    bytes.get(i)?;
    Some((tokens, i + 1))
}

fn decode_pgm(bytes: &[u8], path: &Path) -> Result<LabelMap> {
    let corrupt = |detail: &str| Error::Decode { path: path.to_owned(), detail: detail.to_owned() };
    let unsupported = |detail: String| Error::UnsupportedPixelFormat { path: path.to_owned(), detail };
    let magic = bytes.get(..2).ok_or_else(|| corrupt("truncated header"))?;
    match magic {
        b"P5" | b"P2" => {}
        b"P3" | b"P6" => return Err(unsupported("RGB (PPM)".into())),
        _ => return Err(corrupt("not a PGM file")),
    }
    let (tokens, offset) = pgm_header(bytes).ok_or_else(|| corrupt("truncated header"))?;
    let num = |t: &[u8]| -> Result<usize> {
        std::str::from_utf8(t).ok().and_then(|s| s.parse().ok()).ok_or_else(|| corrupt("malformed header field"))
    };
    let (width, height, maxval) = (num(tokens[1])?, num(tokens[2])?, num(tokens[3])?);
    if maxval == 0 || maxval > 65535 {
        return Err(corrupt("maxval out of range"));
    }
    if maxval > 255 {
        return Err(unsupported(format!("16-bit samples (maxval {maxval})")));
    }
    let n = width.checked_mul(height).ok_or_else(|| corrupt("dimensions overflow"))?;
    let labels: Vec<u32> = if magic == b"P5" {
        let raster = &bytes[offset..];
        if raster.len() < n {
            return Err(corrupt("truncated raster"));
        }
        raster[..n].iter().map(|&b| u32::from(b)).collect()
    } else {
        let text = std::str::from_utf8(&bytes[offset..]).map_err(|_| corrupt("non-ASCII raster"))?;
        let vals = text
            .split_ascii_whitespace()
            .take(n)
            .map(|t| t.parse::<u32>().map_err(|_| corrupt("malformed sample")))
            .collect::<Result<Vec<_>>>()?;
        if vals.len() < n {
            return Err(corrupt("truncated raster"));
        }
        vals
    };
    if let Some(&bad) = labels.iter().find(|&&v| v as usize > maxval) {
        return Err(corrupt(&format!("sample {bad} exceeds maxval {maxval}")));
    }
    LabelMap::new(width, height, labels).map_err(|_| corrupt("zero-sized image"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path() -> &'static Path {
        Path::new("test.pgm")
    }

    #[test]
    fn decodes_tiny_pgm() {
        let bytes = b"P5\n2 2\n255\n\x00\x01\x01\x00";
        let m = decode_pgm(bytes, path()).unwrap();
        assert_eq!(m.dims(), (2, 2));
        assert_eq!(m.labels(), &[0, 1, 1, 0]);
    }

    #[test]
    fn header_comments_and_small_maxval() {
        let bytes = b"P5 # label map\n# second comment\n3 1 # dims\n2\n\x00\x02\x01";
        let m = decode_pgm(bytes, path()).unwrap();
        assert_eq!(m.labels(), &[0, 2, 1]);
    }

    #[test]
    fn ascii_pgm() {
        let m = decode_pgm(b"P2\n3 1\n9\n4 0 9\n", path()).unwrap();
        assert_eq!(m.labels(), &[4, 0, 9]);
    }

    #[test]
    fn sixteen_bit_and_rgb_are_unsupported() {
        let err = decode_pgm(b"P5\n1 1\n65535\n\x00\x01", path()).unwrap_err();
        assert!(matches!(err, Error::UnsupportedPixelFormat { .. }));
        assert!(err.to_string().contains("unsupported pixel format"));
        let err = decode_pgm(b"P6\n1 1\n255\n\x00\x00\x00", path()).unwrap_err();
        assert!(matches!(err, Error::UnsupportedPixelFormat { .. }));
    }

    #[test]
    fn rgb_png_is_unsupported() {
        let img = image::RgbImage::new(2, 2);
        let mut buf = std::io::Cursor::new(Vec::new());
        img.write_to(&mut buf, CodecFormat::Png).unwrap();
        let err = decode_png(buf.get_ref(), Path::new("x.png")).unwrap_err();
        assert!(err.to_string().contains("unsupported pixel format"), "{err}");
    }

    #[test]
    fn corrupt_inputs() {
        for bad in [&b"P5\n2 2\n255\n\x00"[..], b"P5\n2", b"hello", b"P5\nx 2\n255\n"] {
            assert!(matches!(decode_pgm(bad, path()), Err(Error::Decode { .. })));
        }
        assert!(matches!(decode_png(b"nope", Path::new("x.png")), Err(Error::Decode { .. })));
    }

    #[test]
    fn roundtrip_both_formats() {
        let dir = tempfile::tempdir().unwrap();
        let m = LabelMap::from_fn(7, 5, |x, y| ((x * 31 + y * 17) % 256) as u32).unwrap();
        for ext in ["pgm", "png"] {
            let p = dir.path().join(format!("m.{ext}"));
            save_label_map(&m, &p, None).unwrap();
            assert_eq!(load_label_map(&p, None).unwrap(), m);
        }
    }

    #[test]
    fn wide_labels_cannot_be_saved() {
        let m = LabelMap::from_rows(&[[0, 256]]).unwrap();
        assert!(matches!(encode_pgm(&m), Err(Error::LabelOutOfRange(256))));
    }

    #[test]
    fn missing_file_is_io() {
        let err = load_label_map("/definitely/not/here.pgm", None).unwrap_err();
        assert!(err.is_io());
    }
}
