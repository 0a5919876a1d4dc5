from .device import (
    DeviceModel,
    ChannelConstructor,
    CHANNEL_BUILDERS,
    register_constructor,
    channel_for,
    gst_alphabet,
    restrict,
    validate_device,
    IDEAL_POVM,
    IDEAL_PREP,
)
from .gst_ourense import builtin_gst_ourense, OURENSE_EDGES, PUBLISHED_METRICS
from .trapped_ion import TrappedIonParams, builtin_trapped_ion
from .io import load_device, save_device, device_to_dict, device_from_dict
from .builtins import builtin_ideal, ideal_counterpart, resolve_device
