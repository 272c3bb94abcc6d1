"""Async utilities for running exact computations in a thread pool."""
import asyncio
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from typing import Any, TypeVar

# Operator assembly and elimination are CPU bound and synchronous
_executor = ThreadPoolExecutor(max_workers=4, thread_name_prefix="hjj_")

T = TypeVar("T")


async def run_sync(func: Callable[..., T], *args: Any, **kwargs: Any) -> T:
    """
    Run a sync function in the thread pool.

    Usage:
        report = await run_sync(cohomology_service.cohomology, rep, 1)
    """
    loop = asyncio.get_running_loop()
    if kwargs:
        return await loop.run_in_executor(_executor, lambda: func(*args, **kwargs))
    return await loop.run_in_executor(_executor, func, *args)
