//! Coarse-to-fine spatial pyramid partitioning of feature maps.
//!
//! A partition tiles an H x W map with one grid of rectangular regions per
//! level (grid sizes 1, 2, 4 by default, giving 1 + 4 + 16 = 21 regions).
//! Every loss in the crate is a sum over these regions.

use std::ops::Range;

use ndarray::{Array3, ArrayView3};

use crate::error::{Result, SamkdError};

/// One rectangular cell of a pyramid level. Spans are half-open pixel intervals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    /// 1-based level number within the partition.
    pub level: usize,
    /// Row-major cell index within the level.
    pub cell_index: usize,
    pub row_span: Range<usize>,
    pub col_span: Range<usize>,
}

impl Region {
    pub fn height(&self) -> usize {
        self.row_span.end - self.row_span.start
    }

    pub fn width(&self) -> usize {
        self.col_span.end - self.col_span.start
    }
}

/// One grid of a partition: `grid_size` x `grid_size` regions, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level {
    pub grid_size: usize,
    pub regions: Vec<Region>,
}

/// The full coarse-to-fine tiling of an H x W spatial extent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PyramidPartition {
    pub height: usize,
    pub width: usize,
    pub levels: Vec<Level>,
}

impl PyramidPartition {
    /// Total number of regions across all levels.
    pub fn num_regions(&self) -> usize {
        self.levels.iter().map(|l| l.regions.len()).sum()
    }

    /// Iterate regions of every level in order, coarse to fine.
    pub fn regions(&self) -> impl Iterator<Item = &Region> {
        self.levels.iter().flat_map(|l| l.regions.iter())
    }
}

/// Split `[0, extent)` into `grid` half-open spans. The division remainder is
/// absorbed by the last span, so boundary spans may be up to `grid - 1` longer.
fn axis_spans(extent: usize, grid: usize) -> Vec<Range<usize>> {
    let base = extent / grid;
    (0..grid)
        .map(|i| {
            let start = i * base;
            let end = if i + 1 == grid { extent } else { start + base };
            start..end
        })
        .collect()
}

/// Tile an `height` x `width` extent with one grid of regions per entry of
/// `grid_sizes`. Fails when any grid does not fit inside the extent.
pub fn partition(height: usize, width: usize, grid_sizes: &[usize]) -> Result<PyramidPartition> {
    if grid_sizes.is_empty() {
        return Err(SamkdError::InvalidDimension("empty grid size list".into()));
    }
    for &g in grid_sizes {
        if g == 0 {
            return Err(SamkdError::InvalidDimension("grid size 0".into()));
        }
        if height < g || width < g {
            return Err(SamkdError::InvalidDimension(format!(
                "map {}x{} is smaller than grid size {}",
                height, width, g
            )));
        }
    }

    let levels = grid_sizes
        .iter()
        .enumerate()
        .map(|(li, &g)| {
            let rows = axis_spans(height, g);
            let cols = axis_spans(width, g);
            let mut regions = Vec::with_capacity(g * g);
            for (ri, row_span) in rows.iter().enumerate() {
                for (ci, col_span) in cols.iter().enumerate() {
                    regions.push(Region {
                        level: li + 1,
                        cell_index: ri * g + ci,
                        row_span: row_span.clone(),
                        col_span: col_span.clone(),
                    });
                }
            }
            Level { grid_size: g, regions }
        })
        .collect();

    Ok(PyramidPartition { height, width, levels })
}

/// View the `H_R x W_R x C` slab of `map` covered by `region`. Pure read.
pub fn extract<'a>(map: &'a Array3<f64>, region: &Region) -> Result<ArrayView3<'a, f64>> {
    let (h, w, _c) = map.dim();
    if region.row_span.end > h || region.col_span.end > w {
        return Err(SamkdError::InvalidRegion(format!(
            "region rows {:?} cols {:?} out of bounds for {}x{} map",
            region.row_span, region.col_span, h, w
        )));
    }
    if region.row_span.is_empty() || region.col_span.is_empty() {
        return Err(SamkdError::InvalidRegion("empty region span".into()));
    }
    Ok(map.slice(ndarray::s![
        region.row_span.clone(),
        region.col_span.clone(),
        ..
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::Array3;

    #[test]
    fn default_partition_has_21_regions_with_exact_divisibility() {
        let p = partition(8, 8, &[1, 2, 4]).unwrap();
        assert_eq!(p.num_regions(), 21);
        for r in &p.levels[2].regions {
            assert_eq!(r.height(), 2);
            assert_eq!(r.width(), 2);
        }
    }

    #[test]
    fn single_level_identity_case() {
        let p = partition(4, 4, &[1]).unwrap();
        assert_eq!(p.num_regions(), 1);
        let r = &p.levels[0].regions[0];
        assert_eq!(r.row_span, 0..4);
        assert_eq!(r.col_span, 0..4);
    }

    #[test]
    fn remainder_goes_to_last_region() {
        // Derived by enumerating spans under the remainder rule and checking
        // exact cover by brute force over all 100 pixels.
        let p = partition(10, 10, &[4]).unwrap();
        let level = &p.levels[0];
        assert_eq!(level.regions.len(), 16);

        let expected = [0..2, 2..4, 4..6, 6..10];
        for (ri, row) in expected.iter().enumerate() {
            for (ci, col) in expected.iter().enumerate() {
                let r = &level.regions[ri * 4 + ci];
                assert_eq!(&r.row_span, row);
                assert_eq!(&r.col_span, col);
            }
        }

        let mut covered = vec![0u32; 100];
        for r in &level.regions {
            for i in r.row_span.clone() {
                for j in r.col_span.clone() {
                    covered[i * 10 + j] += 1;
                }
            }
        }
        assert!(covered.iter().all(|&c| c == 1), "not an exact cover");
    }

    #[test]
    fn rejects_dimension_smaller_than_grid() {
        let err = partition(3, 8, &[4]).unwrap_err();
        assert_eq!(err.class(), "invalid-dimension");
    }

    #[test]
    fn partition_is_deterministic() {
        let a = partition(13, 9, &[1, 2, 4]).unwrap();
        let b = partition(13, 9, &[1, 2, 4]).unwrap();
        assert_eq!(a, b);
    }

    fn ramp_map(h: usize, w: usize, c: usize) -> Array3<f64> {
        Array3::from_shape_fn((h, w, c), |(i, j, k)| (i * w * c + j * c + k) as f64)
    }

    #[test]
    fn extract_full_region_is_identity() {
        let map = ramp_map(5, 7, 2);
        let p = partition(5, 7, &[1]).unwrap();
        let v = extract(&map, &p.levels[0].regions[0]).unwrap();
        assert_eq!(v, map.view());
    }

    #[test]
    fn extract_level2_cell0_is_top_left_slab() {
        let map = ramp_map(4, 4, 1);
        let p = partition(4, 4, &[2]).unwrap();
        let v = extract(&map, &p.levels[0].regions[0]).unwrap();
        assert_eq!(v.dim(), (2, 2, 1));
        assert_eq!(v[[0, 0, 0]], map[[0, 0, 0]]);
        assert_eq!(v[[1, 1, 0]], map[[1, 1, 0]]);
    }

    #[test]
    fn extract_matches_direct_indexing_on_ramp() {
        // Brute-force index comparison on the bottom-right cell of a 6x6x3 map.
        let map = ramp_map(6, 6, 3);
        let p = partition(6, 6, &[2]).unwrap();
        let region = &p.levels[0].regions[3];
        let v = extract(&map, region).unwrap();
        assert_eq!(v.dim(), (3, 3, 3));
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert_eq!(v[[i, j, k]], map[[3 + i, 3 + j, k]]);
                }
            }
        }
    }

    #[test]
    fn extract_out_of_bounds_region_errors() {
        let map = ramp_map(4, 4, 1);
        let bad = Region {
            level: 1,
            cell_index: 0,
            row_span: 2..6,
            col_span: 0..4,
        };
        assert_eq!(extract(&map, &bad).unwrap_err().class(), "invalid-region");
    }

    #[test]
    fn reassembling_level_regions_reproduces_map() {
        let map = ramp_map(9, 11, 2);
        let p = partition(9, 11, &[1, 2, 4]).unwrap();
        for level in &p.levels {
            let mut rebuilt = Array3::zeros((9, 11, 2));
            for r in &level.regions {
                let v = extract(&map, r).unwrap();
                rebuilt
                    .slice_mut(ndarray::s![r.row_span.clone(), r.col_span.clone(), ..])
                    .assign(&v);
            }
            assert_eq!(rebuilt, map);
        }
    }
}
