__version__ = "0.4"
__description__ = (
    "Lifecycle analytics (remained / demolished / redeveloped) for multi-temporal"
    " urban-village segmentation masks."
)
