//! Binary masks from attention, and their application to student features.
//!
//! Attentive positions get mask value 0: they are hidden from the student and
//! must be regenerated by the reconstruction blocks. Thresholds act as
//! multipliers on the attention-map mean by default (`ThresholdMode::Relative`),
//! which keeps the whole swept threshold range meaningful; the literal
//! absolute comparison is available as `ThresholdMode::Absolute`.

use ndarray::{Array1, Array2, Array3, ArrayView3};

use crate::attention::AttentionPair;
use crate::config::ThresholdMode;
use crate::error::{Result, SamkdError};

/// Binary spatial (H_R x W_R x 1) and channel (1 x 1 x C) masks.
#[derive(Debug, Clone, PartialEq)]
pub struct MaskPair {
    pub spatial: Array3<f64>,
    pub channel: Array3<f64>,
}

/// Learned 1x1 channel alignment from student to teacher feature space.
///
/// Identity-initialized when the channel counts match, so distillation starts
/// from pass-through.
#[derive(Debug, Clone, PartialEq)]
pub struct AlignTransform {
    /// (student_channels, teacher_channels)
    pub weight: Array2<f64>,
    /// (teacher_channels,)
    pub bias: Array1<f64>,
}

impl AlignTransform {
    pub fn identity(channels: usize) -> Self {
        AlignTransform {
            weight: Array2::eye(channels),
            bias: Array1::zeros(channels),
        }
    }

    pub fn in_channels(&self) -> usize {
        self.weight.nrows()
    }

    pub fn out_channels(&self) -> usize {
        self.weight.ncols()
    }

    /// Per-pixel channel mapping of an H x W x C_in map to H x W x C_out.
    pub fn apply(&self, features: ArrayView3<'_, f64>) -> Result<Array3<f64>> {
        let (h, w, c_in) = features.dim();
        if c_in != self.in_channels() {
            return Err(SamkdError::InvalidShape(format!(
                "alignment expects {} input channels, got {}",
                self.in_channels(),
                c_in
            )));
        }
        let c_out = self.out_channels();
        let mut out = Array3::zeros((h, w, c_out));
        for i in 0..h {
            for j in 0..w {
                for co in 0..c_out {
                    let mut acc = self.bias[co];
                    for ci in 0..c_in {
                        acc += features[[i, j, ci]] * self.weight[[ci, co]];
                    }
                    out[[i, j, co]] = acc;
                }
            }
        }
        Ok(out)
    }
}

fn threshold_for(attn: &Array3<f64>, omega: f64, mode: ThresholdMode) -> f64 {
    match mode {
        ThresholdMode::Relative => {
            let mean = attn.sum() / attn.len() as f64;
            omega * mean
        }
        ThresholdMode::Absolute => omega,
    }
}

fn binarize(attn: &Array3<f64>, threshold: f64) -> Array3<f64> {
    attn.mapv(|a| if a >= threshold { 0.0 } else { 1.0 })
}

/// Threshold dual attention into dual binary masks.
pub fn make_masks(
    attn: &AttentionPair,
    omega_s: f64,
    omega_c: f64,
    mode: ThresholdMode,
) -> Result<MaskPair> {
    if !(omega_s > 0.0) || !(omega_c > 0.0) {
        return Err(SamkdError::InvalidHyperparameter(format!(
            "masking thresholds must be positive, got omega_s={} omega_c={}",
            omega_s, omega_c
        )));
    }
    let ts = threshold_for(&attn.spatial, omega_s, mode);
    let tc = threshold_for(&attn.channel, omega_c, mode);
    Ok(MaskPair {
        spatial: binarize(&attn.spatial, ts),
        channel: binarize(&attn.channel, tc),
    })
}

/// Hadamard product with a mask broadcast over channels (spatial mask,
/// H x W x 1) or over pixels (channel mask, 1 x 1 x C).
pub fn hadamard_masked(features: ArrayView3<'_, f64>, mask: &Array3<f64>) -> Result<Array3<f64>> {
    let (h, w, c) = features.dim();
    let (mh, mw, mc) = mask.dim();
    let mut out = features.to_owned();
    if (mh, mw, mc) == (h, w, 1) {
        for i in 0..h {
            for j in 0..w {
                let m = mask[[i, j, 0]];
                for k in 0..c {
                    out[[i, j, k]] *= m;
                }
            }
        }
        Ok(out)
    } else if (mh, mw, mc) == (1, 1, c) {
        for k in 0..c {
            let m = mask[[0, 0, k]];
            for i in 0..h {
                for j in 0..w {
                    out[[i, j, k]] *= m;
                }
            }
        }
        Ok(out)
    } else {
        Err(SamkdError::InvalidShape(format!(
            "mask {}x{}x{} does not broadcast over features {}x{}x{}",
            mh, mw, mc, h, w, c
        )))
    }
}

/// Align student features to the teacher channel count, then erase the
/// attentive positions under each mask. Returns the spatially masked and
/// channel masked maps, both in teacher feature space.
pub fn apply_masks(
    student_features: ArrayView3<'_, f64>,
    masks: &MaskPair,
    align: &AlignTransform,
) -> Result<(Array3<f64>, Array3<f64>)> {
    let aligned = align.apply(student_features)?;
    let (h, w, c) = aligned.dim();
    if masks.spatial.dim() != (h, w, 1) {
        return Err(SamkdError::InvalidShape(format!(
            "spatial mask {:?} does not match region {}x{}",
            masks.spatial.dim(),
            h,
            w
        )));
    }
    if masks.channel.dim() != (1, 1, c) {
        return Err(SamkdError::InvalidShape(format!(
            "channel mask {:?} does not match {} aligned channels",
            masks.channel.dim(),
            c
        )));
    }
    let fs = hadamard_masked(aligned.view(), &masks.spatial)?;
    let fc = hadamard_masked(aligned.view(), &masks.channel)?;
    Ok((fs, fc))
}
