use crate::{EcgRecord, Error, Result};

/// A sound-card input. Implementations own their stream; `capture_live`
/// borrows the device mutably so there is one reader at a time.
pub trait CaptureDevice {
    fn id(&self) -> &str;

    fn supports_rate(&self, sample_rate_hz: f64) -> bool;

    /// Fill `buf` with the next samples of the selected channel. Returns the
    /// number written; fewer than `buf.len()` means the stream ended.
    fn read(&mut self, sample_rate_hz: f64, buf: &mut [f64]) -> Result<usize>;
}

/// Pick a device by identifier.
pub fn find_device<'a>(
    devices: &'a mut [Box<dyn CaptureDevice>],
    id: &str,
) -> Result<&'a mut (dyn CaptureDevice + 'static)> {
    devices
        .iter_mut()
        .find(|d| d.id() == id)
        .map(|d| d.as_mut())
        .ok_or_else(|| Error::Capture(format!("no input device named '{id}'")))
}

/// Acquire `duration_s * sample_rate_hz` samples from `device`.
pub fn capture_live(
    device: &mut dyn CaptureDevice,
    duration_s: f64,
    sample_rate_hz: f64,
) -> Result<EcgRecord> {
    if !(duration_s.is_finite() && duration_s >= 0.0) {
        return Err(Error::invalid(format!("duration {duration_s} s")));
    }
    if !device.supports_rate(sample_rate_hz) {
        return Err(Error::Capture(format!(
            "device '{}' does not support {sample_rate_hz} Hz",
            device.id()
        )));
    }
    let wanted = (duration_s * sample_rate_hz).round() as usize;
    let mut samples = vec![0.0; wanted];
    let mut filled = 0;
    while filled < wanted {
        let got = device.read(sample_rate_hz, &mut samples[filled..])?;
        if got == 0 {
            return Err(Error::Capture(format!(
                "stream from '{}' interrupted after {filled} of {wanted} samples",
                device.id()
            )));
        }
        filled += got;
    }
    EcgRecord::new(samples, sample_rate_hz, format!("capture:{}", device.id()))
}

/// Loopback stand-in: "records" a prepared signal, cycling it if needed.
/// Useful as a fixture and for replaying files through the live path.
#[derive(Debug, Clone)]
pub struct PlaybackDevice {
    id: String,
    signal: Vec<f64>,
    rates: Vec<f64>,
    position: usize,
    chunk: usize,
    cycle: bool,
}

impl PlaybackDevice {
    pub fn new(id: impl Into<String>, signal: Vec<f64>, rates: Vec<f64>) -> Self {
        Self {
            id: id.into(),
            signal,
            rates,
            position: 0,
            chunk: 1024,
            cycle: true,
        }
    }

    /// Stop after one pass instead of looping.
    pub fn once(mut self) -> Self {
        self.cycle = false;
        self
    }
}

impl CaptureDevice for PlaybackDevice {
    fn id(&self) -> &str {
        &self.id
    }

    fn supports_rate(&self, sample_rate_hz: f64) -> bool {
        self.rates.contains(&sample_rate_hz)
    }

    fn read(&mut self, _sample_rate_hz: f64, buf: &mut [f64]) -> Result<usize> {
        if self.signal.is_empty() {
            return Ok(0);
        }
        let mut n = 0;
        while n < buf.len().min(self.chunk) {
            if self.position == self.signal.len() {
                if !self.cycle {
                    break;
                }
                self.position = 0;
            }
            buf[n] = self.signal[self.position];
            self.position += 1;
            n += 1;
        }
        Ok(n)
    }
}
