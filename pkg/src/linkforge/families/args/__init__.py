from .chain_layout_args import CENTER_AREA, ChainLayout
from .chainmail_args import ChainmailParams
