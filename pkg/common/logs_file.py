import logging

from django.conf import settings

# Configure logger
logger = logging.getLogger('workbench')
logger.setLevel(getattr(logging, str(settings.WORKBENCH_LOG_LEVEL).upper(), logging.INFO))

# Create file handler; the file is only opened on the first record
file_handler = logging.FileHandler(settings.WORKBENCH_LOG_FILE, delay=True)
file_handler.setLevel(logging.INFO)

# Create formatter and add it to the handler
formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
file_handler.setFormatter(formatter)

# Add the handler to the logger
if not logger.handlers:
    logger.addHandler(file_handler)
