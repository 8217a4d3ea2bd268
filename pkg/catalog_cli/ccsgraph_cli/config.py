from ccsgraph_lib.config import get_settings

settings = get_settings()
