import os

from dotenv import load_dotenv

load_dotenv()


class Settings:
    SEED = int(os.environ.get("BIASPLAN_SEED", "1729"))
    TRIALS = int(os.environ.get("BIASPLAN_TRIALS", "1000"))
    DENOMINATOR_BOUND = int(os.environ.get("BIASPLAN_DENOM_BOUND", "64"))
    LOG_LEVEL = os.environ.get("BIASPLAN_LOG_LEVEL", "WARNING").upper()
    WORKERS = int(os.environ.get("BIASPLAN_WORKERS", "1"))


settings = Settings()
